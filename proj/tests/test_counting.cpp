#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "commtuple/counting.hpp"
#include "commtuple/errors.hpp"
#include "oracles.hpp"

using namespace commtuple;

TEST_CASE("closed form examples") {
  CHECK(count_closed_form({2, 1, 2}) == 2);
  CHECK(count_closed_form({3, 1, 2}) == 8);
  CHECK(count_closed_form({4, 2, 2}) == 141);
  CHECK(count_closed_form({1, 4, 7}) == 1);
  CHECK_THROWS_AS((count_closed_form({3, 1, 4})), InvalidArgument);
}

TEST_CASE("recurrence examples") {
  CHECK(count_recurrence({3, 1, 2}) == 8);
  CHECK(count_recurrence({3, 2, 2}) == 15);
  CHECK(count_recurrence({1, 5, 3}) == 1);
  CHECK_THROWS_AS((count_recurrence({3, 1, 9})), InvalidArgument);
}

TEST_CASE("components per class") {
  CHECK(components_per_class(AntisymMatrix(4, 3), 3) == 1);

  AntisymMatrix case2(3, 2);
  case2.set(1, 2, 1);
  CHECK(components_per_class(case2, 2) == 2);

  AntisymMatrix case3(3, 2);
  case3.set(0, 1, 1);
  CHECK(components_per_class(case3, 2) == 2);

  // a(2,3) is forced to 0 by a(0,1) = 1 and zeros elsewhere
  AntisymMatrix unrealizable(4, 2);
  unrealizable.set(0, 1, 1);
  unrealizable.set(2, 3, 1);
  CHECK(components_per_class(unrealizable, 1) == 0);
  CHECK_FALSE(components_per_class_exponent(unrealizable, 1).has_value());
}

TEST_CASE("enumeration examples") {
  CHECK(count_enumeration({3, 1, 2}) == 8);
  CHECK(count_enumeration({2, 3, 3}) == 3);
  CHECK(count_enumeration({4, 1, 2}) == 36);
  CHECK_THROWS_AS((count_enumeration({6, 1, 5})), SizeGuardExceeded);
  CHECK_THROWS_AS((count_enumeration({4, 1, 2}, 10)), SizeGuardExceeded);
}

TEST_CASE("n = 3, m = 1, p = 2 tally by case") {
  // 1 Case 1 + 1 Case 2 + 4 Case 3 (pivot 1) + 2 Case 3 (pivot 2), one component each
  int case1 = 0, case2 = 0, pivot1 = 0, pivot2 = 0;
  for (const auto& c : enumerate_antisym({3, 1, 2})) {
    CHECK(components_per_class(c, 1) == 1);
    const auto tag = case_of(c);
    if (tag.kind == CaseTag::Kind::case1) ++case1;
    if (tag.kind == CaseTag::Kind::case2) ++case2;
    if (tag.kind == CaseTag::Kind::case3 && tag.pivot == 1) ++pivot1;
    if (tag.kind == CaseTag::Kind::case3 && tag.pivot == 2) ++pivot2;
  }
  CHECK(case1 == 1);
  CHECK(case2 == 1);
  CHECK(pivot1 == 4);
  CHECK(pivot2 == 2);
}

TEST_CASE("enumeration matches the rank oracle") {
  for (int p : {2, 3, 5}) {
    for (int n = 1; n <= 5; ++n) {
      if (antisym_count(n, p) > 100'000) continue;
      for (int m = 1; m <= 3; ++m) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(p);
        CHECK(count_enumeration({n, m, p}) == oracle::brute_force_components(n, m, p));
      }
    }
  }
}

TEST_CASE("triple agreement") {
  for (int p : {2, 3, 5}) {
    for (int n = 1; n <= 5; ++n) {
      for (int m = 1; m <= 3; ++m) {
        const GroupParams params{n, m, p};
        const BigInt closed = count_closed_form(params);
        CHECK(closed == count_recurrence(params));
        if (antisym_count(n, p) <= 600'000) CHECK(closed == count_enumeration(params));
      }
    }
  }
}

TEST_CASE("torres giese") {
  CHECK(torres_giese(3) == 7);
  CHECK(torres_giese(4) == 35);
  CHECK(torres_giese(2) == 1);
  CHECK(torres_giese(1) == 0);
  for (int n = 1; n <= 20; ++n) {
    const BigInt direct = (ipow(2, static_cast<unsigned>(n)) - 1) * (ipow(2, static_cast<unsigned>(n - 1)) - 1) / 3;
    CHECK(torres_giese(n) == direct);
    CHECK(count_closed_form({n, 1, 2}) - 1 == torres_giese(n));
  }
  CHECK_THROWS_AS(torres_giese(0), InvalidArgument);
}

TEST_CASE("rep components") {
  CHECK(count_rep_components({3, 1, 2}) == 8);
  CHECK(count_rep_components({1, 1, 5}) == 1);
  CHECK(count_rep_components({3, 1, 3}) == 27);
  CHECK_THROWS_AS((count_rep_components({3, 1, 6})), InvalidArgument);
}

TEST_CASE("two generators give p components") {
  for (int p : {2, 3, 5, 7}) {
    for (int m = 1; m <= 10; ++m) {
      CHECK(count_closed_form({2, m, p}) == p);
      CHECK(count_recurrence({2, m, p}) == p);
    }
  }
}

TEST_CASE("large parameters stay exact") {
  // p^((m-1)(n-2)) alone is 7^72 here; no 64-bit path could represent it.
  const BigInt closed = count_closed_form({20, 5, 7});
  CHECK(closed == count_recurrence({20, 5, 7}));
  CHECK(closed > ipow(7, 72));
}

TEST_CASE("thread cap does not change the result") {
  setenv("COMMTUPLE_THREADS", "3", 1);
  const BigInt three = count_enumeration({5, 2, 3});
  setenv("COMMTUPLE_THREADS", "1", 1);
  const BigInt one = count_enumeration({5, 2, 3});
  unsetenv("COMMTUPLE_THREADS");
  CHECK(three == one);
  CHECK(one == count_closed_form({5, 2, 3}));
}
