#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "commtuple/errors.hpp"
#include "commtuple/extraspecial.hpp"

using namespace commtuple;

TEST_CASE("group orders") {
  CHECK(build_extraspecial(2).order() == 8);
  CHECK(build_extraspecial(3).order() == 27);
  CHECK(build_extraspecial(5).order() == 125);
  CHECK(build_extraspecial(7).order() == 343);
  CHECK_THROWS_AS(build_extraspecial(4), InvalidArgument);
  CHECK_THROWS_AS(build_extraspecial(11), InvalidArgument);
}

TEST_CASE("presentation residuals") {
  for (int p : {2, 3, 5, 7}) {
    const auto report = verify_presentation(build_extraspecial(p));
    CHECK(report.relations.size() >= 4);
    CHECK(report.max_residual() < 1e-10);
    CHECK(report.holds(1e-10));
  }
}

TEST_CASE("centers are the scalar roots of unity") {
  for (int p : {2, 3, 5}) {
    const auto g = build_extraspecial(p);
    const auto center = center_of(g);
    CHECK(center.size() == static_cast<std::size_t>(p));
    for (const auto& z : center) CHECK(central_exponent(z, p).has_value());
    CHECK(g.order() / center.size() == static_cast<std::size_t>(p * p));
  }
}

TEST_CASE("exponent p for odd p, order 4 off-center for p = 2") {
  for (int p : {3, 5}) {
    const auto g = build_extraspecial(p);
    for (const auto& e : g.elements()) {
      CHECK((unitary_power(e, p) - ComplexMatrix::Identity(p, p)).norm() < 1e-10);
      if (!central_exponent(e, p)) CHECK(element_order(e, p) == p);
    }
  }
  const auto q8 = build_extraspecial(2);
  int order4 = 0;
  for (const auto& e : q8.elements()) {
    if (!central_exponent(e, 2)) {
      CHECK(element_order(e, 4) == 4);
      ++order4;
    }
  }
  CHECK(order4 == 6);
}

TEST_CASE("closure contains generators and inverses") {
  const auto g = build_extraspecial(3);
  CHECK(g.contains(ComplexMatrix::Identity(3, 3)));
  CHECK(g.contains(g.generators().x0));
  CHECK(g.contains(g.generators().y0));
  for (const auto& a : g.elements()) {
    CHECK(g.contains(a.adjoint()));
    CHECK(g.contains(a * g.generators().x0));
  }
  CHECK_FALSE(g.contains(std::polar(1.0, 0.1) * ComplexMatrix::Identity(3, 3)));
}

TEST_CASE("element order") {
  const auto pair = clock_shift(5);
  CHECK(element_order(ComplexMatrix::Identity(5, 5), 5) == 1);
  CHECK(element_order(pair.x0, 5) == 5);
  CHECK_FALSE(element_order(pair.x0, 4).has_value());
}
