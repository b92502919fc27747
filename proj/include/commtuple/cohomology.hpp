#pragma once

// Rational Poincare polynomials of components of Hom(Z^n, G_{m,p}).
//
// The identity component has the rational cohomology of the Weyl invariants
// of H*(G/T) (x) H*(T^n). With W = (Sigma_p)^m acting factorwise, the
// invariant Poincare series is Q(t)^m where Q is the Molien-type average
//   Q(t) = 1/p! sum_lambda |class(lambda)| tr_lambda(coinvariants) tr_lambda(exterior^n)
// taken over cycle types lambda of Sigma_p.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "commtuple/central_data.hpp"

namespace commtuple {

using Rational = boost::multiprecision::cpp_rational;

/// Polynomial in t with exact rational coefficients.
class GradedSeries {
 public:
  GradedSeries() = default;
  /// Dense coefficients, index = degree.
  explicit GradedSeries(std::vector<Rational> coeffs);

  static GradedSeries constant(const Rational& c);
  /// c * t^degree
  static GradedSeries monomial(const Rational& c, int degree);

  /// -1 for the zero series.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(int degree) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Nonzero coefficients keyed by degree.
  std::map<int, Rational> sparse() const;

  GradedSeries operator+(const GradedSeries& other) const;
  GradedSeries operator-(const GradedSeries& other) const;
  GradedSeries operator*(const GradedSeries& other) const;
  GradedSeries operator*(const Rational& scalar) const;
  GradedSeries pow(unsigned exponent) const;

  /// Exact polynomial division; throws InexactArithmetic on a nonzero remainder.
  GradedSeries divide_exact(const GradedSeries& divisor) const;

  Rational evaluate(const Rational& t) const;

  bool has_nonnegative_integer_coeffs() const;

  /// Human readable, e.g. "1 + t^2 + 2t^3".
  std::string to_string() const;

  friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Parses the to_string() format: terms "c", "t", "ct", "t^d", "ct^d",
/// optionally "c/d", separated by " + " or " - ". Used by tests and the CLI.
GradedSeries parse_series(const std::string& text);

struct CycleType {
  std::vector<int> parts;        // non-increasing, sums to p
  std::uint64_t class_size = 0;  // permutations of this type in Sigma_p
};

/// Partitions of `size` (1 <= size <= 12) in reverse lexicographic order,
/// starting with (size).
std::vector<CycleType> partitions(int size);

struct WeylData {
  int p = 2;
  std::vector<int> degrees;  // fundamental invariant degrees 2, ..., p
};

WeylData weyl_data(int p);

/// Graded trace of a permutation of type lambda on the coinvariant algebra of
/// Sigma_p acting on its reflection representation, degrees doubled.
GradedSeries coinvariant_trace(const CycleType& lambda, int p);

/// Graded trace of a permutation of type lambda on the n-fold tensor power of
/// the exterior algebra of the reflection representation.
GradedSeries exterior_trace(const CycleType& lambda, int n);

GradedSeries poincare_identity_component(const GroupParams& params);

/// Poincare polynomial of SU(p)^m, shared by every non-identity component.
GradedSeries poincare_nonidentity_component(const GroupParams& params);

}  // namespace commtuple
