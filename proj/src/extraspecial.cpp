#include "commtuple/extraspecial.hpp"

#include <algorithm>
#include <string>

#include "commtuple/errors.hpp"

namespace commtuple {

FiniteMatrixGroup::FiniteMatrixGroup(int p, ClockShiftPair generators, std::vector<ComplexMatrix> elements)
    : p_(p), generators_(std::move(generators)), elements_(std::move(elements)) {}

std::optional<std::size_t> FiniteMatrixGroup::index_of(const ComplexMatrix& m) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if ((elements_[i] - m).norm() < kElementEquality) return i;
  }
  return std::nullopt;
}

FiniteMatrixGroup build_extraspecial(int p) {
  if (!is_prime(p)) throw InvalidArgument("build_extraspecial: p must be prime, got " + std::to_string(p));
  if (p > 7) throw InvalidArgument("build_extraspecial: p must be <= 7, got " + std::to_string(p));
  ClockShiftPair pair = clock_shift(p);
  const std::vector<ComplexMatrix> gens{pair.omega * ComplexMatrix::Identity(p, p), pair.x0, pair.y0};

  const std::size_t expected = static_cast<std::size_t>(p * p * p);
  std::vector<ComplexMatrix> elements{ComplexMatrix::Identity(p, p)};
  auto known = [&](const ComplexMatrix& m) {
    return std::any_of(elements.begin(), elements.end(),
                       [&](const ComplexMatrix& e) { return (e - m).norm() < kElementEquality; });
  };

  // Breadth-first closure; each round multiplies the newest layer by every generator.
  std::vector<ComplexMatrix> frontier = elements;
  int rounds = 0;
  while (!frontier.empty()) {
    if (++rounds > static_cast<int>(expected) + 1) {
      throw ClosureDidNotStabilize("closure of E_" + std::to_string(p) + " did not stabilize");
    }
    std::vector<ComplexMatrix> next;
    for (const auto& e : frontier) {
      for (const auto& g : gens) {
        ComplexMatrix product = e * g;
        if (!known(product)) {
          elements.push_back(product);
          next.push_back(std::move(product));
        }
      }
    }
    if (elements.size() > expected) {
      throw ClosureDidNotStabilize("closure of E_" + std::to_string(p) + " exceeded p^3 elements");
    }
    frontier = std::move(next);
  }
  return {p, std::move(pair), std::move(elements)};
}

double PresentationReport::max_residual() const {
  double worst = 0.0;
  for (const auto& r : relations) worst = std::max(worst, r.residual);
  return worst;
}

PresentationReport verify_presentation(const FiniteMatrixGroup& g) {
  const int p = g.prime();
  const auto& x = g.generators().x0;
  const auto& y = g.generators().y0;
  const ComplexMatrix id = ComplexMatrix::Identity(p, p);
  const ComplexMatrix c = g.generators().omega * id;

  PresentationReport report;
  auto add = [&](std::string name, const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    report.relations.push_back({std::move(name), (lhs - rhs).norm()});
  };
  if (p == 2) {
    add("x^4 = 1", unitary_power(x, 4), id);
    add("y^4 = 1", unitary_power(y, 4), id);
    add("x^2 = y^2", unitary_power(x, 2), unitary_power(y, 2));
    add("y x y^-1 x^-1 = c", commutator(y, x), c);
  } else {
    add("x^p = 1", unitary_power(x, p), id);
    add("y^p = 1", unitary_power(y, p), id);
    add("c^p = 1", unitary_power(c, p), id);
    add("x c = c x", x * c, c * x);
    add("y c = c y", y * c, c * y);
    add("x y = c y x", x * y, c * y * x);
  }
  const int exponent = p == 2 ? 4 : p;
  double worst = 0.0;
  for (const auto& e : g.elements()) worst = std::max(worst, (unitary_power(e, exponent) - id).norm());
  report.relations.push_back({"M^" + std::to_string(exponent) + " = 1 for all elements", worst});
  return report;
}

std::vector<ComplexMatrix> center_of(const FiniteMatrixGroup& g) {
  std::vector<ComplexMatrix> center;
  for (const auto& z : g.elements()) {
    const bool central = std::all_of(g.elements().begin(), g.elements().end(), [&](const ComplexMatrix& e) {
      return (z * e - e * z).norm() < kElementEquality;
    });
    if (central) center.push_back(z);
  }
  return center;
}

std::optional<int> element_order(const ComplexMatrix& m, int max_order) {
  const ComplexMatrix id = ComplexMatrix::Identity(m.rows(), m.cols());
  ComplexMatrix power = m;
  for (int k = 1; k <= max_order; ++k) {
    if ((power - id).norm() < kElementEquality) return k;
    power = power * m;
  }
  return std::nullopt;
}

}  // namespace commtuple
