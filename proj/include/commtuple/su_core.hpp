#pragma once

// Dense complex unitary kernel for SU(p) and almost commuting tuples in SU(p)^m.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "commtuple/central_data.hpp"

namespace commtuple {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

struct Tolerance {
  double unitary = 1e-9;  // ||M M* - I||_F
  double det = 1e-9;      // |det M - 1|
  double central = 1e-6;  // ||M - omega^k I||_F, also off-diagonal residuals

  void validate() const;
};

/// omega^k with omega = exp(2 pi i / p).
Complex root_of_unity(int p, int k);

struct ClockShiftPair {
  ComplexMatrix x0;
  ComplexMatrix y0;
  Complex omega;
};

/// Canonical pair with x0 y0 x0^-1 y0^-1 = omega I.
///
/// Odd p: x0 is the cyclic shift e_j -> e_{j+1} and y0 = diag(omega^-j), both
/// of order p. p = 2: x0 = i sigma_x, y0 = i sigma_y with x0^2 = y0^2 = -I.
ClockShiftPair clock_shift(int p);

/// x y x^-1 y^-1, inverses taken as adjoints.
ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y);

/// M^k for unitary M; negative k uses the adjoint.
ComplexMatrix unitary_power(const ComplexMatrix& m, int k);

double unitary_residual(const ComplexMatrix& m);
double det_residual(const ComplexMatrix& m);

/// k with ||M - omega^k I||_F <= tol.central, if there is exactly one.
std::optional<int> central_exponent(const ComplexMatrix& m, int p, const Tolerance& tol = {});

/// An n-tuple of points of SU(p)^m, stored as mats[generator][factor].
class UnitaryTuple {
 public:
  UnitaryTuple() = default;
  /// Identity tuple.
  explicit UnitaryTuple(const GroupParams& params);
  /// Takes ownership of a generator-major, factor-minor list of n*m matrices.
  UnitaryTuple(const GroupParams& params, std::vector<ComplexMatrix> mats);

  const GroupParams& params() const { return params_; }
  const ComplexMatrix& at(int generator, int factor) const;
  ComplexMatrix& at(int generator, int factor);

  /// Generators [first, first + count) as a shorter tuple.
  UnitaryTuple slice(int first, int count) const;

  /// Per-factor conjugation g_f * M * g_f^-1 of every generator.
  UnitaryTuple conjugated(std::span<const ComplexMatrix> g) const;

  /// Throws ValidationError naming [generator][factor] for the first matrix
  /// that is not special unitary within tolerance.
  void validate(const Tolerance& tol = {}) const;

 private:
  GroupParams params_;
  std::vector<ComplexMatrix> mats_;
};

/// Commutator exponents between generators; every factor must agree.
/// Throws NotAlmostCommuting otherwise.
AntisymMatrix commutator_class(const UnitaryTuple& t, const Tolerance& tol = {});

struct SimultaneousEigen {
  ComplexMatrix basis;                     // unitary, columns are common eigenvectors
  std::vector<std::vector<double>> phases;  // [matrix][column], each in [0, 2 pi)
};

/// Common eigenbasis of pairwise commuting unitaries. The first matrix is
/// diagonalized, then each eigenspace is refined by the following matrices.
/// Throws NotCommuting if some matrix is not diagonal in the final basis.
SimultaneousEigen simultaneous_diagonalize(std::span<const ComplexMatrix> mats, const Tolerance& tol = {});

/// Seeded Haar-distributed element of U(p), first column rotated so det = 1.
ComplexMatrix random_su(int p, std::uint64_t seed);

/// One random_su per factor, seeds derived from `seed`.
std::vector<ComplexMatrix> random_su_factors(int p, int m, std::uint64_t seed);

/// Independent sub-seed for stream `stream` of a seeded computation (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Wraps an angle into [0, 2 pi); values within `snap` of 2 pi become 0.
double wrap_phase(double angle, double snap = 1e-9);

}  // namespace commtuple
