#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "commtuple/errors.hpp"
#include "commtuple/su_core.hpp"

using namespace commtuple;

namespace {

ComplexMatrix identity(int p) { return ComplexMatrix::Identity(p, p); }

ComplexMatrix diag_phases(const std::vector<double>& phases) {
  ComplexMatrix d = ComplexMatrix::Zero(static_cast<Eigen::Index>(phases.size()), static_cast<Eigen::Index>(phases.size()));
  for (std::size_t j = 0; j < phases.size(); ++j) d(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = std::polar(1.0, phases[j]);
  return d;
}

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("clock shift p = 2") {
  const auto pair = clock_shift(2);
  CHECK((commutator(pair.x0, pair.y0) + identity(2)).norm() < 1e-12);
  CHECK((pair.x0 * pair.x0 + identity(2)).norm() < 1e-12);
  CHECK((pair.y0 * pair.y0 + identity(2)).norm() < 1e-12);
  CHECK((unitary_power(pair.x0, 4) - identity(2)).norm() < 1e-12);
}

TEST_CASE("clock shift odd primes") {
  for (int p : {3, 5, 7}) {
    const auto pair = clock_shift(p);
    const ComplexMatrix omega_i = root_of_unity(p, 1) * identity(p);
    CHECK((commutator(pair.x0, pair.y0) - omega_i).norm() < 1e-12);
    CHECK((unitary_power(pair.x0, p) - identity(p)).norm() < 1e-12);
    CHECK((unitary_power(pair.y0, p) - identity(p)).norm() < 1e-12);
    CHECK(std::abs(pair.x0.determinant() - 1.0) < 1e-12);
    CHECK(std::abs(pair.y0.determinant() - 1.0) < 1e-12);
    for (int s = 1; s < p; ++s) {
      CHECK((commutator(unitary_power(pair.x0, s), pair.y0) - root_of_unity(p, s) * identity(p)).norm() < 1e-12);
    }
  }
  CHECK_THROWS_AS(clock_shift(4), InvalidArgument);
}

TEST_CASE("commutator examples") {
  const auto pair = clock_shift(3);
  CHECK((commutator(identity(3), pair.y0) - identity(3)).norm() < 1e-14);
  CHECK((commutator(diag_phases({0.3, 1.0, -1.3}), diag_phases({2.0, -0.5, -1.5})) - identity(3)).norm() < 1e-14);
  CHECK_THROWS_AS(commutator(identity(2), identity(3)), InvalidArgument);
}

TEST_CASE("central exponent") {
  CHECK(central_exponent(identity(3), 3) == 0);
  CHECK(central_exponent(std::polar(1.0, 2 * std::numbers::pi / 3) * identity(3), 3) == 1);
  CHECK_FALSE(central_exponent(diag_phases({0.0, std::numbers::pi}), 2).has_value());
  CHECK_FALSE(central_exponent(std::polar(1.0, 0.5) * identity(3), 3).has_value());
  for (int p : {2, 3, 5, 7}) {
    for (int k = 0; k < p; ++k) CHECK(central_exponent(root_of_unity(p, k) * identity(p), p) == k);
  }
}

TEST_CASE("commutator class examples") {
  CHECK(commutator_class(UnitaryTuple({3, 2, 3})).is_zero());

  const auto pair = clock_shift(2);
  const UnitaryTuple heisenberg({2, 1, 2}, {pair.x0, pair.y0});
  CHECK(commutator_class(heisenberg)(0, 1) == 1);

  const double c = std::cos(0.4), s = std::sin(0.4);
  ComplexMatrix rotation(2, 2);
  rotation << c, -s, s, c;
  const UnitaryTuple bad({2, 1, 2}, {diag_phases({std::numbers::pi / 2, -std::numbers::pi / 2}), rotation});
  CHECK_THROWS_AS(commutator_class(bad), NotAlmostCommuting);
}

TEST_CASE("commutator class rejects factors that disagree") {
  const auto pair = clock_shift(3);
  const UnitaryTuple t({2, 2, 3}, {pair.x0, pair.x0, pair.y0, pair.y0.adjoint()});
  CHECK_THROWS_AS(commutator_class(t), NotAlmostCommuting);
}

TEST_CASE("commutator class is antisymmetric and conjugation invariant") {
  const auto pair = clock_shift(3);
  const ComplexMatrix omega = root_of_unity(3, 1) * identity(3);
  const UnitaryTuple t({3, 2, 3}, {pair.x0, pair.x0, pair.y0, pair.y0, omega * pair.x0 * pair.y0, pair.x0 * pair.y0});
  const auto c = commutator_class(t);
  CHECK(c.is_antisymmetric());
  CHECK_FALSE(c.is_zero());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_su_factors(3, 2, seed);
    CHECK(commutator_class(t.conjugated(g)) == c);
  }
}

TEST_CASE("tuple validation names the offending matrix") {
  UnitaryTuple t({2, 2, 2});
  t.at(1, 0) = 2.0 * identity(2);
  try {
    t.validate();
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("[1][0]") != std::string::npos);
  }
  UnitaryTuple det_off({1, 1, 2});
  det_off.at(0, 0) = diag_phases({0.1, 0.2});
  CHECK_THROWS_AS(det_off.validate(), ValidationError);
  CHECK_NOTHROW(UnitaryTuple({2, 2, 2}).validate());
}

TEST_CASE("tolerance validation") {
  CHECK_NOTHROW(Tolerance{}.validate());
  CHECK_THROWS_AS((Tolerance{0.0, 1e-9, 1e-6}.validate()), InvalidArgument);
  CHECK_THROWS_AS((Tolerance{1e-9, 1e-9, -1.0}.validate()), InvalidArgument);
}

static void check_phases(const std::vector<double>& got, const std::vector<double>& expected) {
  REQUIRE(got.size() == expected.size());
  const auto a = sorted(got), b = sorted(expected);
  for (std::size_t j = 0; j < a.size(); ++j) CHECK(a[j] == doctest::Approx(b[j]).epsilon(1e-9));
}

TEST_CASE("simultaneous diagonalization of diagonal matrices") {
  const std::vector<double> a{0.5, 1.0, 2 * std::numbers::pi - 1.5};
  const std::vector<double> b{0.2, 0.2, 2 * std::numbers::pi - 0.4};
  const std::vector<ComplexMatrix> mats{diag_phases(a), diag_phases(b)};
  const auto eig = simultaneous_diagonalize(mats);
  check_phases(eig.phases[0], a);
  check_phases(eig.phases[1], b);
}

TEST_CASE("simultaneous diagonalization is conjugation invariant and reconstructs") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    // repeated eigenvalues in the first matrix force a refinement step
    const std::vector<double> a{0.7, 0.7, 0.7, -2.1};
    const std::vector<double> b{0.3, 1.1, -0.9, -0.5};
    const ComplexMatrix g = random_su(4, seed);
    const std::vector<ComplexMatrix> mats{g * diag_phases(a) * g.adjoint(), g * diag_phases(b) * g.adjoint()};
    const auto eig = simultaneous_diagonalize(mats);
    std::vector<double> wa, wb;
    for (double x : a) wa.push_back(wrap_phase(x));
    for (double x : b) wb.push_back(wrap_phase(x));
    check_phases(eig.phases[0], wa);
    check_phases(eig.phases[1], wb);
    CHECK((eig.basis * eig.basis.adjoint() - ComplexMatrix::Identity(4, 4)).norm() < 1e-10);
    for (std::size_t k = 0; k < mats.size(); ++k) {
      const ComplexMatrix rebuilt = eig.basis * diag_phases(eig.phases[k]) * eig.basis.adjoint();
      CHECK((rebuilt - mats[k]).norm() < 1e-8);
    }
  }
}

TEST_CASE("simultaneous diagonalization phase sums vanish for special unitaries") {
  const std::vector<ComplexMatrix> mats{random_su(3, 5) * diag_phases({1.0, 2.0, -3.0}) * random_su(3, 5).adjoint()};
  const auto eig = simultaneous_diagonalize(mats);
  double sum = 0.0;
  for (double x : eig.phases[0]) {
    CHECK(x >= 0.0);
    CHECK(x < 2 * std::numbers::pi);
    sum += x;
  }
  CHECK(std::abs(std::remainder(sum, 2 * std::numbers::pi)) < 1e-9);
}

TEST_CASE("simultaneous diagonalization rejects non-commuting input") {
  const auto pair = clock_shift(2);
  const std::vector<ComplexMatrix> mats{pair.x0, pair.y0};
  CHECK_THROWS_AS(simultaneous_diagonalize(mats), NotCommuting);
}

TEST_CASE("random_su is deterministic and special unitary") {
  for (int p : {2, 3, 5, 7}) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const ComplexMatrix m = random_su(p, seed);
      CHECK(m == random_su(p, seed));
      CHECK(unitary_residual(m) < 1e-10);
      CHECK(det_residual(m) < 1e-10);
    }
  }
  CHECK_FALSE(random_su(3, 1) == random_su(3, 2));
  CHECK(random_su_factors(3, 2, 9) == random_su_factors(3, 2, 9));
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
}

TEST_CASE("random_su trace smoke test") {
  // Haar measure on SU(2): E|tr| = 8 / (3 pi) ~ 0.8488.
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) total += std::abs(random_su(2, seed).trace());
  const double mean = total / 1000.0;
  CHECK(mean < 1.0);
  CHECK(mean == doctest::Approx(8.0 / (3.0 * std::numbers::pi)).epsilon(0.05));
}

TEST_CASE("wrap_phase") {
  CHECK(wrap_phase(-0.5) == doctest::Approx(2 * std::numbers::pi - 0.5));
  CHECK(wrap_phase(2 * std::numbers::pi - 1e-12) == 0.0);
  CHECK(wrap_phase(7.0) == doctest::Approx(7.0 - 2 * std::numbers::pi));
}

TEST_CASE("unitary power") {
  const auto pair = clock_shift(5);
  CHECK((unitary_power(pair.x0, -2) * unitary_power(pair.x0, 2) - identity(5)).norm() < 1e-12);
  CHECK(unitary_power(pair.y0, 0) == identity(5));
}
