#pragma once

// The extraspecial group E_p realized inside SU(p) by the clock/shift pair.

#include <optional>
#include <string>
#include <vector>

#include "commtuple/su_core.hpp"

namespace commtuple {

/// Frobenius distance below which two group elements are identified.
inline constexpr double kElementEquality = 1e-8;

class FiniteMatrixGroup {
 public:
  FiniteMatrixGroup(int p, ClockShiftPair generators, std::vector<ComplexMatrix> elements);

  int prime() const { return p_; }
  const ClockShiftPair& generators() const { return generators_; }
  const std::vector<ComplexMatrix>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  std::optional<std::size_t> index_of(const ComplexMatrix& m) const;
  bool contains(const ComplexMatrix& m) const { return index_of(m).has_value(); }

 private:
  int p_;
  ClockShiftPair generators_;
  std::vector<ComplexMatrix> elements_;
};

/// Multiplicative closure of {omega I, x0, y0}; p prime, p <= 7.
FiniteMatrixGroup build_extraspecial(int p);

struct RelationResidual {
  std::string relation;
  double residual = 0.0;
};

struct PresentationReport {
  std::vector<RelationResidual> relations;

  double max_residual() const;
  bool holds(double tol) const { return max_residual() < tol; }
};

/// Frobenius residual of each defining relation, plus the exponent relation
/// (M^p = I for odd p, M^4 = I for p = 2) maximized over all elements.
PresentationReport verify_presentation(const FiniteMatrixGroup& g);

/// Elements commuting with every element of g.
std::vector<ComplexMatrix> center_of(const FiniteMatrixGroup& g);

/// Smallest k in [1, max_order] with M^k = I, or nullopt.
std::optional<int> element_order(const ComplexMatrix& m, int max_order);

}  // namespace commtuple
