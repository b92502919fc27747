#include "commtuple/labels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "commtuple/counting.hpp"
#include "commtuple/errors.hpp"

namespace commtuple {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const char* kind_name(ComponentLabel::Kind kind) {
  switch (kind) {
    case ComponentLabel::Kind::identity:
      return "identity";
    case ComponentLabel::Kind::case2:
      return "case 2";
    case ComponentLabel::Kind::case3:
      return "case 3";
  }
  return "?";
}

ComponentLabel::Kind expected_kind(const AntisymMatrix& c) {
  switch (case_of(c).kind) {
    case CaseTag::Kind::case1:
      return ComponentLabel::Kind::identity;
    case CaseTag::Kind::case2:
      return ComponentLabel::Kind::case2;
    case CaseTag::Kind::case3:
      return ComponentLabel::Kind::case3;
  }
  return ComponentLabel::Kind::identity;
}

// Per-factor product x_0^-a x_i^b for the Case 3 pivot pair of t.
ComplexMatrix pivot_word(const UnitaryTuple& t, int pivot, int factor, const PivotCoordinates& coord) {
  return unitary_power(t.at(0, factor), -coord.a) * unitary_power(t.at(pivot, factor), coord.b);
}

CentralVector central_class(const std::vector<ComplexMatrix>& per_factor, int p, const Tolerance& tol,
                            const std::string& what) {
  std::vector<int> raw;
  raw.reserve(per_factor.size());
  for (std::size_t f = 0; f < per_factor.size(); ++f) {
    const auto k = central_exponent(per_factor[f], p, tol);
    if (!k) throw NonCentralResidual(what + " is not central in factor " + std::to_string(f));
    raw.push_back(*k);
  }
  return {std::move(raw), p};
}

// -1, 0, 1 by lexicographic comparison with a tie threshold.
int compare_phases(const double* a, const double* b, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    if (std::abs(a[i] - b[i]) > kPhaseTie) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

CentralVector::CentralVector(std::vector<int> raw, int p) : coords_(std::move(raw)), p_(p) {
  if (coords_.empty()) throw InvalidArgument("central vector needs at least one factor");
  if (!is_prime(p)) throw InvalidArgument("central vector modulus must be prime");
  const int last = coords_.back();
  for (int& v : coords_) v = mod_p(v - last, p);
}

std::vector<ComplexMatrix> CentralVector::matrices() const {
  std::vector<ComplexMatrix> out;
  out.reserve(coords_.size());
  for (int v : coords_) out.push_back(root_of_unity(p_, v) * ComplexMatrix::Identity(p_, p_));
  return out;
}

CentralVector CentralVector::operator+(const CentralVector& other) const {
  if (other.p_ != p_ || other.coords_.size() != coords_.size()) throw InvalidArgument("central vector mismatch");
  std::vector<int> sum(coords_.size());
  for (std::size_t f = 0; f < sum.size(); ++f) sum[f] = coords_[f] + other.coords_[f];
  return {std::move(sum), p_};
}

std::vector<CentralVector> all_central_vectors(int m, int p) {
  std::vector<CentralVector> out;
  std::vector<int> digits(static_cast<std::size_t>(m), 0);
  while (true) {
    out.emplace_back(digits, p);
    // odometer over the first m-1 coordinates, last one fastest
    int pos = m - 2;
    while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == p) digits[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
  return out;
}

ComponentLabel ComponentLabel::case2(AntisymMatrix c, CentralVector head, ComponentLabel sub) {
  if (case_of(c).kind != CaseTag::Kind::case2) throw InvalidArgument("case2 label needs a Case 2 matrix");
  ComponentLabel label;
  label.kind_ = Kind::case2;
  label.matrix_ = std::move(c);
  label.decorations_.push_back(std::move(head));
  label.sub_ = std::make_shared<const ComponentLabel>(std::move(sub));
  return label;
}

ComponentLabel ComponentLabel::case3(AntisymMatrix c, std::vector<CentralVector> residuals) {
  if (case_of(c).kind != CaseTag::Kind::case3) throw InvalidArgument("case3 label needs a Case 3 matrix");
  ComponentLabel label;
  label.kind_ = Kind::case3;
  label.matrix_ = std::move(c);
  label.decorations_ = std::move(residuals);
  return label;
}

const AntisymMatrix& ComponentLabel::matrix() const {
  if (!matrix_) throw InvalidArgument("identity label has no commutator class");
  return *matrix_;
}

const ComponentLabel& ComponentLabel::sub() const {
  if (!sub_) throw InvalidArgument("only case 2 labels carry a sub-label");
  return *sub_;
}

bool operator==(const ComponentLabel& a, const ComponentLabel& b) {
  if (a.kind_ != b.kind_ || a.matrix_ != b.matrix_ || a.decorations_ != b.decorations_) return false;
  if (static_cast<bool>(a.sub_) != static_cast<bool>(b.sub_)) return false;
  return !a.sub_ || *a.sub_ == *b.sub_;
}

std::vector<ComponentLabel> labels_for_class(const AntisymMatrix& c, int m) {
  const int p = c.modulus();
  const CaseTag tag = case_of(c);
  std::vector<ComponentLabel> out;
  switch (tag.kind) {
    case CaseTag::Kind::case1:
      out.push_back(ComponentLabel::identity());
      break;
    case CaseTag::Kind::case2: {
      const auto subs = labels_for_class(delete_first(c), m);
      for (const auto& head : all_central_vectors(m, p)) {
        for (const auto& sub : subs) out.push_back(ComponentLabel::case2(c, head, sub));
      }
      break;
    }
    case CaseTag::Kind::case3: {
      if (!is_realizable(c)) break;
      const auto classes = all_central_vectors(m, p);
      const std::size_t slots = static_cast<std::size_t>(c.size() - 2);
      std::vector<std::size_t> pick(slots, 0);
      while (true) {
        std::vector<CentralVector> residuals;
        residuals.reserve(slots);
        for (std::size_t s : pick) residuals.push_back(classes[s]);
        out.push_back(ComponentLabel::case3(c, std::move(residuals)));
        std::size_t pos = slots;
        while (pos > 0 && ++pick[pos - 1] == classes.size()) pick[--pos] = 0;
        if (pos == 0) break;
      }
      break;
    }
  }
  return out;
}

std::vector<ComponentLabel> enumerate_labels(const GroupParams& params, std::uint64_t guard) {
  params.validate();
  if (count_closed_form(params) > guard) {
    throw SizeGuardExceeded("label count exceeds guard " + std::to_string(guard));
  }
  std::vector<ComponentLabel> out;
  for (AntisymEnumerator e(params.n, params.p); !e.done(); e.advance()) {
    auto labels = labels_for_class(e.current(), params.m);
    std::move(labels.begin(), labels.end(), std::back_inserter(out));
  }
  return out;
}

void validate_label(const ComponentLabel& label, const GroupParams& params) {
  params.validate();
  if (label.is_identity()) return;
  const AntisymMatrix& c = label.matrix();
  if (c.size() != params.n || c.modulus() != params.p) {
    throw InvalidArgument("label matrix does not match n=" + std::to_string(params.n) + ", p=" +
                          std::to_string(params.p));
  }
  if (!c.is_antisymmetric()) throw InvalidArgument("label matrix is not antisymmetric");
  if (expected_kind(c) != label.kind()) {
    throw InvalidArgument(std::string("label kind ") + kind_name(label.kind()) + " does not match its matrix");
  }
  if (!is_realizable(c)) throw InvalidArgument("label matrix is not the class of any almost commuting tuple");
  const std::size_t expected = label.kind() == ComponentLabel::Kind::case2 ? 1 : static_cast<std::size_t>(params.n - 2);
  if (label.decorations().size() != expected) {
    throw InvalidArgument("label needs " + std::to_string(expected) + " decorations, got " +
                          std::to_string(label.decorations().size()));
  }
  for (const auto& d : label.decorations()) {
    if (d.factors() != params.m || d.modulus() != params.p) {
      throw InvalidArgument("decoration does not match m=" + std::to_string(params.m));
    }
  }
  if (label.kind() == ComponentLabel::Kind::case2) {
    GroupParams sub_params = params;
    sub_params.n -= 1;
    const auto& sub = label.sub();
    if (sub.is_identity() || sub.matrix() != delete_first(c)) {
      throw InvalidArgument("case 2 sub-label must carry the matrix with row and column 0 deleted");
    }
    validate_label(sub, sub_params);
  }
}

UnitaryTuple representative(const ComponentLabel& label, const GroupParams& params) {
  validate_label(label, params);
  UnitaryTuple t(params);
  if (label.is_identity()) return t;
  const auto [n, m, p] = params;
  const AntisymMatrix& c = label.matrix();

  if (label.kind() == ComponentLabel::Kind::case2) {
    const auto head = label.decorations().front().matrices();
    GroupParams sub_params = params;
    sub_params.n -= 1;
    const UnitaryTuple tail = representative(label.sub(), sub_params);
    for (int f = 0; f < m; ++f) {
      t.at(0, f) = head[static_cast<std::size_t>(f)];
      for (int k = 1; k < n; ++k) t.at(k, f) = tail.at(k - 1, f);
    }
    return t;
  }

  const int pivot = case_of(c).pivot;
  const ClockShiftPair pair = clock_shift(p);
  // [x0^s, y0] = omega^s realizes the pivot entry.
  const ComplexMatrix x = unitary_power(pair.x0, c(0, pivot));
  const ComplexMatrix& y = pair.y0;
  const auto coords = pivot_coordinates(c);
  for (int f = 0; f < m; ++f) {
    t.at(0, f) = x;
    t.at(pivot, f) = y;
  }
  std::size_t slot = 0;
  for (int k = 1; k < n; ++k) {
    if (k == pivot) continue;
    const auto& coord = coords[static_cast<std::size_t>(k)];
    const ComplexMatrix word = unitary_power(x, -coord.a) * unitary_power(y, coord.b);
    const auto w = label.decorations()[slot++].matrices();
    for (int f = 0; f < m; ++f) t.at(k, f) = w[static_cast<std::size_t>(f)] * word;
  }
  return t;
}

ComponentLabel classify(const UnitaryTuple& t, const Tolerance& tol) {
  const AntisymMatrix c = commutator_class(t, tol);
  const auto [n, m, p] = t.params();
  const CaseTag tag = case_of(c);
  if (tag.kind == CaseTag::Kind::case1) return ComponentLabel::identity();

  if (tag.kind == CaseTag::Kind::case2) {
    std::vector<ComplexMatrix> first;
    for (int f = 0; f < m; ++f) first.push_back(t.at(0, f));
    CentralVector head = central_class(first, p, tol, "generator 0");
    return ComponentLabel::case2(c, std::move(head), classify(t.slice(1, n - 1), tol));
  }

  const auto coords = pivot_coordinates(c);
  std::vector<CentralVector> residuals;
  for (int k = 1; k < n; ++k) {
    if (k == tag.pivot) continue;
    std::vector<ComplexMatrix> w;
    for (int f = 0; f < m; ++f) {
      w.push_back(t.at(k, f) * pivot_word(t, tag.pivot, f, coords[static_cast<std::size_t>(k)]).adjoint());
    }
    residuals.push_back(central_class(w, p, tol, "residual of generator " + std::to_string(k)));
  }
  return ComponentLabel::case3(c, std::move(residuals));
}

UnitaryTuple central_translate(const UnitaryTuple& t, int generator, const CentralVector& u) {
  const auto& params = t.params();
  if (generator < 0 || generator >= params.n) throw InvalidArgument("generator index out of range");
  if (u.factors() != params.m || u.modulus() != params.p) throw InvalidArgument("central vector mismatch");
  UnitaryTuple out = t;
  const auto scalars = u.matrices();
  for (int f = 0; f < params.m; ++f) out.at(generator, f) = scalars[static_cast<std::size_t>(f)] * t.at(generator, f);
  return out;
}

RepPoint::RepPoint(const GroupParams& params, std::vector<double> phases)
    : params_(params), phases_(std::move(phases)) {
  params_.validate();
  if (phases_.size() != static_cast<std::size_t>(params.m * params.p * params.n)) {
    throw InvalidArgument("rep point needs m*p*n phases");
  }
}

double RepPoint::at(int factor, int row, int generator) const {
  return phases_.at(static_cast<std::size_t>((factor * params_.p + row) * params_.n + generator));
}

RepPoint canonicalize_rep_point(const RepPoint& raw) {
  const auto [n, m, p] = raw.params();
  std::uint64_t shifts = 1;
  for (int k = 0; k < n; ++k) {
    shifts *= static_cast<std::uint64_t>(p);
    if (shifts > 1'000'000) throw SizeGuardExceeded("too many central shifts to canonicalize");
  }
  const auto row_len = static_cast<std::size_t>(n);
  const auto factor_len = static_cast<std::size_t>(p) * row_len;

  std::vector<double> best;
  std::vector<double> candidate(raw.phases().size());
  std::vector<int> shift(static_cast<std::size_t>(n), 0);
  std::vector<std::size_t> order(static_cast<std::size_t>(p));
  std::vector<double> sorted(factor_len);
  for (std::uint64_t s = 0; s < shifts; ++s) {
    for (int f = 0; f < m; ++f) {
      const std::size_t base = static_cast<std::size_t>(f) * factor_len;
      for (int r = 0; r < p; ++r) {
        for (int k = 0; k < n; ++k) {
          const std::size_t idx = base + static_cast<std::size_t>(r) * row_len + static_cast<std::size_t>(k);
          candidate[idx] = wrap_phase(raw.phases()[idx] + kTwoPi * shift[static_cast<std::size_t>(k)] / p, kPhaseTie);
        }
      }
      for (std::size_t r = 0; r < order.size(); ++r) order[r] = r;
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return compare_phases(&candidate[base + a * row_len], &candidate[base + b * row_len], row_len) < 0;
      });
      for (std::size_t r = 0; r < order.size(); ++r) {
        std::copy_n(&candidate[base + order[r] * row_len], row_len, &sorted[r * row_len]);
      }
      std::copy(sorted.begin(), sorted.end(), candidate.begin() + static_cast<std::ptrdiff_t>(base));
    }
    if (best.empty() || compare_phases(candidate.data(), best.data(), candidate.size()) < 0) best = candidate;
    for (int k = n - 1; k >= 0 && ++shift[static_cast<std::size_t>(k)] == p; --k) shift[static_cast<std::size_t>(k)] = 0;
  }
  return {raw.params(), std::move(best)};
}

double rep_point_distance(const RepPoint& a, const RepPoint& b) {
  if (!(a.params() == b.params())) throw InvalidArgument("rep points have different parameters");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.phases().size(); ++i) {
    const double d = std::abs(a.phases()[i] - b.phases()[i]);
    worst = std::max(worst, std::min(d, kTwoPi - d));
  }
  return worst;
}

RepPoint canonical_rep_point(const UnitaryTuple& t, const Tolerance& tol) {
  if (!classify(t, tol).is_identity()) throw NotIdentityComponent("tuple is not in the identity component");
  const auto [n, m, p] = t.params();
  std::vector<double> phases(static_cast<std::size_t>(m * p * n));
  for (int f = 0; f < m; ++f) {
    std::vector<ComplexMatrix> mats;
    for (int k = 0; k < n; ++k) mats.push_back(t.at(k, f));
    const SimultaneousEigen eig = simultaneous_diagonalize(mats, tol);
    for (int r = 0; r < p; ++r) {
      for (int k = 0; k < n; ++k) {
        phases[static_cast<std::size_t>((f * p + r) * n + k)] =
            eig.phases[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)];
      }
    }
  }
  return canonicalize_rep_point(RepPoint(t.params(), std::move(phases)));
}

UnitaryTuple random_identity_tuple(const GroupParams& params, std::uint64_t seed) {
  params.validate();
  const auto [n, m, p] = params;
  std::mt19937_64 engine(derive_seed(seed, 0));
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  UnitaryTuple t(params);
  for (int k = 0; k < n; ++k) {
    for (int f = 0; f < m; ++f) {
      ComplexMatrix d = ComplexMatrix::Zero(p, p);
      double sum = 0.0;
      for (int r = 0; r + 1 < p; ++r) {
        const double phi = angle(engine);
        sum += phi;
        d(r, r) = std::polar(1.0, phi);
      }
      d(p - 1, p - 1) = std::polar(1.0, -sum);
      t.at(k, f) = d;
    }
  }
  const auto g = random_su_factors(p, m, derive_seed(seed, 1));
  return t.conjugated(g);
}

}  // namespace commtuple
