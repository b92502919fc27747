#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "commtuple/cohomology.hpp"
#include "commtuple/errors.hpp"
#include "oracles.hpp"

using namespace commtuple;

namespace {

GradedSeries poly(std::vector<int> coeffs) {
  std::vector<Rational> r;
  for (int c : coeffs) r.emplace_back(c);
  return GradedSeries(std::move(r));
}

GradedSeries odd_spheres(int p) {
  GradedSeries out = GradedSeries::constant(1);
  for (int i = 2; i <= p; ++i) out = out * (GradedSeries::constant(1) + GradedSeries::monomial(1, 2 * i - 1));
  return out;
}

double to_double(const Rational& r) { return static_cast<double>(r); }

}  // namespace

TEST_CASE("series arithmetic") {
  const auto a = poly({1, 1});
  CHECK(a.pow(3) == poly({1, 3, 3, 1}));
  CHECK((a * a).divide_exact(a) == a);
  CHECK_THROWS_AS((poly({1, 0, 1}).divide_exact(a)), InexactArithmetic);
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(poly({1, 2, 3}).evaluate(Rational(-1)) == 2);
  CHECK(poly({0, 1}).pow(0) == GradedSeries::constant(1));
  CHECK((a * Rational(1, 2)).coeff(1) == Rational(1, 2));
  CHECK(poly({1, 0, 2}).sparse() == std::map<int, Rational>{{0, 1}, {2, 2}});
}

TEST_CASE("series formatting round trip") {
  CHECK(poly({1, 0, 1, 2}).to_string() == "1 + t^2 + 2t^3");
  CHECK(poly({0, 1}).to_string() == "t");
  CHECK(GradedSeries().to_string() == "0");
  CHECK(poly({1, -1}).to_string() == "1 - t");
  for (const std::string s : {"1 + t^2 + 2t^3", "t", "3 - 2t^5", "1/2 + 3/4t"}) {
    CHECK(parse_series(s).to_string() == s);
  }
  CHECK(parse_series("1 + t^2 + 2t^3") == poly({1, 0, 1, 2}));
  CHECK_THROWS(parse_series("1 + x"));
}

TEST_CASE("partitions") {
  const auto three = partitions(3);
  REQUIRE(three.size() == 3);
  CHECK(three[0].parts == std::vector<int>{3});
  CHECK(three[0].class_size == 2);
  CHECK(three[1].parts == std::vector<int>{2, 1});
  CHECK(three[1].class_size == 3);
  CHECK(three[2].parts == std::vector<int>{1, 1, 1});
  CHECK(three[2].class_size == 1);
  const std::vector<std::size_t> counts{1, 2, 3, 5, 7, 11, 15};
  for (int k = 1; k <= 7; ++k) {
    const auto parts = partitions(k);
    CHECK(parts.size() == counts[static_cast<std::size_t>(k - 1)]);
    std::uint64_t total = 0, factorial = 1;
    for (const auto& c : parts) total += c.class_size;
    for (int j = 2; j <= k; ++j) factorial *= static_cast<std::uint64_t>(j);
    CHECK(total == factorial);
  }
}

TEST_CASE("weyl data") {
  CHECK(weyl_data(2).degrees == std::vector<int>{2});
  CHECK(weyl_data(5).degrees == std::vector<int>{2, 3, 4, 5});
}

TEST_CASE("graded traces for p = 2") {
  const auto parts = partitions(2);
  const CycleType swap = parts[0], id = parts[1];
  CHECK(coinvariant_trace(id, 2) == poly({1, 0, 1}));
  CHECK(coinvariant_trace(swap, 2) == poly({1, 0, -1}));
  CHECK(exterior_trace(id, 1) == poly({1, 1}));
  CHECK(exterior_trace(swap, 1) == poly({1, -1}));
  CHECK(exterior_trace(id, 2) == poly({1, 2, 1}));
}

TEST_CASE("coinvariant trace of the identity has total dimension p!") {
  for (int p : {2, 3, 5}) {
    const auto parts = partitions(p);
    const auto& id = parts.back();
    std::uint64_t factorial = 1;
    for (int j = 2; j <= p; ++j) factorial *= static_cast<std::uint64_t>(j);
    CHECK(coinvariant_trace(id, p).evaluate(Rational(1)) == Rational(factorial));
  }
}

TEST_CASE("identity component examples") {
  CHECK(poincare_identity_component({2, 1, 2}) == poly({1, 0, 1, 2}));
  CHECK(poincare_identity_component({2, 1, 2}).to_string() == "1 + t^2 + 2t^3");
  for (int p : {2, 3, 5}) {
    for (int m = 1; m <= 3; ++m) CHECK(poincare_identity_component({1, m, p}) == odd_spheres(p).pow(static_cast<unsigned>(m)));
  }
  CHECK_THROWS_AS((poincare_identity_component({2, 1, 11})), InvalidArgument);
}

TEST_CASE("identity component matches the numeric Molien oracle") {
  for (int p : {2, 3, 5}) {
    for (int n = 1; n <= 4; ++n) {
      const auto series = poincare_identity_component({n, 1, p});
      for (double t : {-0.6, 0.2, 0.5, 0.9}) {
        const double expected = oracle::invariant_series_at(p, n, t);
        double got = 0.0;
        for (int d = 0; d <= series.degree(); ++d) got += to_double(series.coeff(d)) * std::pow(t, d);
        CHECK(got == doctest::Approx(expected).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("identity component invariants") {
  for (int p : {2, 3, 5}) {
    for (int n = 1; n <= 4; ++n) {
      for (int m = 1; m <= 3; ++m) {
        const auto series = poincare_identity_component({n, m, p});
        CHECK(series.has_nonnegative_integer_coeffs());
        CHECK(series.coeff(0) == 1);
        CHECK(series.evaluate(Rational(-1)) == 0);
        CHECK(series == poincare_identity_component({n, 1, p}).pow(static_cast<unsigned>(m)));
      }
    }
  }
}

TEST_CASE("non-identity components") {
  CHECK(poincare_nonidentity_component({2, 1, 2}) == poly({1, 0, 0, 1}));
  CHECK(poincare_nonidentity_component({3, 2, 3}) == odd_spheres(3).pow(2));
  CHECK(poincare_nonidentity_component({3, 2, 3}).evaluate(Rational(-1)) == 0);
  CHECK_THROWS_AS((poincare_nonidentity_component({1, 1, 2})), InvalidArgument);
}
