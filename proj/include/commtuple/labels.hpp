#pragma once

// Discrete labels for the path components of Hom(Z^n, G_{m,p}).
//
// A non-identity label is the commutator class C together with central data:
//   Case 2 (row 0 of C vanishes): the class of the central generator 0 and the
//     label of the remaining n-1 generators;
//   Case 3 (pivot i = first k with C(0,k) != 0): for every k outside {0, i},
//     the class of w_k = x_k (x_0^-a_k x_i^b_k)^-1.
// Central classes live in (Z/p)^m modulo the diagonal.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "commtuple/central_data.hpp"
#include "commtuple/su_core.hpp"

namespace commtuple {

/// Element of (Z/p)^m / diagonal, stored with the last coordinate zeroed.
class CentralVector {
 public:
  CentralVector() = default;
  /// Canonicalizes `raw` (any representative, length m >= 1).
  CentralVector(std::vector<int> raw, int p);

  static CentralVector zero(int m, int p) { return CentralVector(std::vector<int>(static_cast<std::size_t>(m), 0), p); }

  const std::vector<int>& coords() const { return coords_; }
  int modulus() const { return p_; }
  int factors() const { return static_cast<int>(coords_.size()); }

  /// Per-factor scalar matrices omega^coords[f] I.
  std::vector<ComplexMatrix> matrices() const;

  CentralVector operator+(const CentralVector& other) const;

  friend bool operator==(const CentralVector&, const CentralVector&) = default;

 private:
  std::vector<int> coords_;
  int p_ = 2;
};

/// All p^(m-1) classes in lexicographic order of their free coordinates.
std::vector<CentralVector> all_central_vectors(int m, int p);

class ComponentLabel {
 public:
  enum class Kind { identity, case2, case3 };

  ComponentLabel() = default;

  static ComponentLabel identity() { return {}; }
  static ComponentLabel case2(AntisymMatrix c, CentralVector head, ComponentLabel sub);
  static ComponentLabel case3(AntisymMatrix c, std::vector<CentralVector> residuals);

  Kind kind() const { return kind_; }
  bool is_identity() const { return kind_ == Kind::identity; }

  /// Commutator class; throws for the identity label.
  const AntisymMatrix& matrix() const;
  /// Case 2: {head}. Case 3: w_k for k outside {0, pivot} in increasing k.
  const std::vector<CentralVector>& decorations() const { return decorations_; }
  /// Case 2 only.
  const ComponentLabel& sub() const;

  friend bool operator==(const ComponentLabel& a, const ComponentLabel& b);

 private:
  Kind kind_ = Kind::identity;
  std::optional<AntisymMatrix> matrix_;
  std::vector<CentralVector> decorations_;
  std::shared_ptr<const ComponentLabel> sub_;
};

inline constexpr std::uint64_t kLabelGuard = 1'000'000;

/// Labels of every component over class c (empty if c is not realizable).
std::vector<ComponentLabel> labels_for_class(const AntisymMatrix& c, int m);

/// Every label for params, identity first, then by class in enumeration order.
/// Throws SizeGuardExceeded if N(n, m, p) > guard.
std::vector<ComponentLabel> enumerate_labels(const GroupParams& params, std::uint64_t guard = kLabelGuard);

/// Throws InvalidArgument unless the label's shape fits params.
void validate_label(const ComponentLabel& label, const GroupParams& params);

/// A tuple in the component named by label.
UnitaryTuple representative(const ComponentLabel& label, const GroupParams& params);

/// Label of the component containing t.
ComponentLabel classify(const UnitaryTuple& t, const Tolerance& tol = {});

/// Multiplies generator k of t by the per-factor scalars of u.
UnitaryTuple central_translate(const UnitaryTuple& t, int generator, const CentralVector& u);

/// Point of the identity component of Rep(Z^n, G_{m,p}) as eigenphases,
/// stored [factor][row][generator]. Rows are joint eigenvalue slots.
class RepPoint {
 public:
  RepPoint(const GroupParams& params, std::vector<double> phases);

  const GroupParams& params() const { return params_; }
  double at(int factor, int row, int generator) const;
  const std::vector<double>& phases() const { return phases_; }

 private:
  GroupParams params_;
  std::vector<double> phases_;
};

/// Tie threshold for lexicographic comparisons of phases.
inline constexpr double kPhaseTie = 1e-9;

/// Canonical representative of the orbit of a raw phase array under row
/// permutations within each factor and the diagonal central shifts of each
/// generator.
RepPoint canonicalize_rep_point(const RepPoint& raw);

/// Maximum absolute phase difference (circular) between two points.
double rep_point_distance(const RepPoint& a, const RepPoint& b);

/// Throws NotIdentityComponent unless classify(t) is the identity label.
RepPoint canonical_rep_point(const UnitaryTuple& t, const Tolerance& tol = {});

/// Random commuting tuple conjugated from the diagonal torus.
UnitaryTuple random_identity_tuple(const GroupParams& params, std::uint64_t seed);

}  // namespace commtuple
