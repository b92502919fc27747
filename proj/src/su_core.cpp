#include "commtuple/su_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>

#include "commtuple/errors.hpp"

namespace commtuple {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kClusterThreshold = 1e-7;

void require_same_size(const ComplexMatrix& x, const ComplexMatrix& y, const char* what) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows()) {
    throw InvalidArgument(std::string(what) + ": dimension mismatch");
  }
}

}  // namespace

void Tolerance::validate() const {
  if (!(unitary > 0.0) || !(det > 0.0) || !(central > 0.0)) {
    throw InvalidArgument("tolerances must be positive");
  }
}

Complex root_of_unity(int p, int k) {
  const double angle = kTwoPi * static_cast<double>(mod_p(k, p)) / static_cast<double>(p);
  return std::polar(1.0, angle);
}

ClockShiftPair clock_shift(int p) {
  if (!is_prime(p)) throw InvalidArgument("clock_shift: p must be prime, got " + std::to_string(p));
  ClockShiftPair pair;
  pair.omega = root_of_unity(p, 1);
  if (p == 2) {
    const Complex i(0.0, 1.0);
    pair.x0.resize(2, 2);
    pair.x0 << 0.0, i, i, 0.0;  // i * sigma_x
    pair.y0.resize(2, 2);
    pair.y0 << 0.0, 1.0, -1.0, 0.0;  // i * sigma_y
    return pair;
  }
  pair.x0 = ComplexMatrix::Zero(p, p);
  pair.y0 = ComplexMatrix::Zero(p, p);
  for (int j = 0; j < p; ++j) {
    pair.x0((j + 1) % p, j) = 1.0;
    pair.y0(j, j) = root_of_unity(p, -j);
  }
  return pair;
}

ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_size(x, y, "commutator");
  return x * y * x.adjoint() * y.adjoint();
}

ComplexMatrix unitary_power(const ComplexMatrix& m, int k) {
  const ComplexMatrix base = k < 0 ? ComplexMatrix(m.adjoint()) : m;
  ComplexMatrix out = ComplexMatrix::Identity(m.rows(), m.cols());
  for (int e = 0; e < std::abs(k); ++e) out = out * base;
  return out;
}

double unitary_residual(const ComplexMatrix& m) {
  return (m * m.adjoint() - ComplexMatrix::Identity(m.rows(), m.cols())).norm();
}

double det_residual(const ComplexMatrix& m) { return std::abs(m.determinant() - Complex(1.0, 0.0)); }

std::optional<int> central_exponent(const ComplexMatrix& m, int p, const Tolerance& tol) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::optional<int> found;
  const ComplexMatrix id = ComplexMatrix::Identity(m.rows(), m.cols());
  for (int k = 0; k < p; ++k) {
    if ((m - root_of_unity(p, k) * id).norm() <= tol.central) {
      if (found) return std::nullopt;
      found = k;
    }
  }
  return found;
}

UnitaryTuple::UnitaryTuple(const GroupParams& params) : params_(params) {
  params_.validate();
  mats_.assign(static_cast<std::size_t>(params.n * params.m), ComplexMatrix::Identity(params.p, params.p));
}

UnitaryTuple::UnitaryTuple(const GroupParams& params, std::vector<ComplexMatrix> mats)
    : params_(params), mats_(std::move(mats)) {
  params_.validate();
  if (mats_.size() != static_cast<std::size_t>(params.n * params.m)) {
    throw InvalidArgument("tuple needs n*m = " + std::to_string(params.n * params.m) + " matrices, got " +
                          std::to_string(mats_.size()));
  }
  for (const auto& mat : mats_) {
    if (mat.rows() != params.p || mat.cols() != params.p) {
      throw InvalidArgument("tuple matrices must be " + std::to_string(params.p) + "x" + std::to_string(params.p));
    }
  }
}

const ComplexMatrix& UnitaryTuple::at(int generator, int factor) const {
  return mats_.at(static_cast<std::size_t>(generator * params_.m + factor));
}

ComplexMatrix& UnitaryTuple::at(int generator, int factor) {
  return mats_.at(static_cast<std::size_t>(generator * params_.m + factor));
}

UnitaryTuple UnitaryTuple::slice(int first, int count) const {
  if (first < 0 || count < 1 || first + count > params_.n) throw InvalidArgument("tuple slice out of range");
  GroupParams sub = params_;
  sub.n = count;
  std::vector<ComplexMatrix> mats;
  mats.reserve(static_cast<std::size_t>(count * params_.m));
  for (int k = first; k < first + count; ++k) {
    for (int f = 0; f < params_.m; ++f) mats.push_back(at(k, f));
  }
  return {sub, std::move(mats)};
}

UnitaryTuple UnitaryTuple::conjugated(std::span<const ComplexMatrix> g) const {
  if (g.size() != static_cast<std::size_t>(params_.m)) throw InvalidArgument("need one conjugator per factor");
  UnitaryTuple out = *this;
  for (int k = 0; k < params_.n; ++k) {
    for (int f = 0; f < params_.m; ++f) {
      const auto& gf = g[static_cast<std::size_t>(f)];
      out.at(k, f) = gf * at(k, f) * gf.adjoint();
    }
  }
  return out;
}

void UnitaryTuple::validate(const Tolerance& tol) const {
  for (int k = 0; k < params_.n; ++k) {
    for (int f = 0; f < params_.m; ++f) {
      const auto& mat = at(k, f);
      const std::string where = "[" + std::to_string(k) + "][" + std::to_string(f) + "]";
      if (const double r = unitary_residual(mat); !(r <= tol.unitary)) {
        throw ValidationError("matrix " + where + " is not unitary (residual " + std::to_string(r) + ")");
      }
      if (const double r = det_residual(mat); !(r <= tol.det)) {
        throw ValidationError("matrix " + where + " does not have determinant 1 (residual " +
                              std::to_string(r) + ")");
      }
    }
  }
}

AntisymMatrix commutator_class(const UnitaryTuple& t, const Tolerance& tol) {
  const auto& [n, m, p] = t.params();
  AntisymMatrix c(n, p);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::optional<int> exponent;
      for (int f = 0; f < m; ++f) {
        const auto k = central_exponent(commutator(t.at(i, f), t.at(j, f)), p, tol);
        const std::string where = "generators " + std::to_string(i) + "," + std::to_string(j) + " factor " +
                                  std::to_string(f);
        if (!k) throw NotAlmostCommuting(where + ": commutator is not a central scalar");
        if (exponent && *exponent != *k) throw NotAlmostCommuting(where + ": factors disagree on the commutator");
        exponent = k;
      }
      c.set(i, j, *exponent);
    }
  }
  return c;
}

SimultaneousEigen simultaneous_diagonalize(std::span<const ComplexMatrix> mats, const Tolerance& tol) {
  if (mats.empty()) throw InvalidArgument("simultaneous_diagonalize: empty matrix list");
  const Eigen::Index dim = mats.front().rows();
  for (const auto& mat : mats) require_same_size(mats.front(), mat, "simultaneous_diagonalize");

  ComplexMatrix basis = ComplexMatrix::Identity(dim, dim);
  // Column ranges of `basis` spanning joint eigenspaces seen so far.
  std::vector<std::pair<Eigen::Index, Eigen::Index>> blocks{{0, dim}};

  for (const auto& mat : mats) {
    std::vector<std::pair<Eigen::Index, Eigen::Index>> refined;
    for (const auto& [start, size] : blocks) {
      if (size == 1) {
        refined.emplace_back(start, size);
        continue;
      }
      const ComplexMatrix v = basis.middleCols(start, size);
      const ComplexMatrix restricted = v.adjoint() * mat * v;
      Eigen::ComplexSchur<ComplexMatrix> schur(restricted);
      const ComplexMatrix& u = schur.matrixU();
      const ComplexMatrix& tri = schur.matrixT();

      // Greedy clustering of eigenvalues by chord distance.
      std::vector<std::vector<Eigen::Index>> clusters;
      std::vector<Complex> centers;
      for (Eigen::Index k = 0; k < size; ++k) {
        const Complex lambda = tri(k, k);
        auto it = std::find_if(centers.begin(), centers.end(),
                               [&](const Complex& c) { return std::abs(c - lambda) < kClusterThreshold; });
        if (it == centers.end()) {
          centers.push_back(lambda);
          clusters.push_back({k});
        } else {
          clusters[static_cast<std::size_t>(it - centers.begin())].push_back(k);
        }
      }
      std::vector<std::size_t> order(clusters.size());
      for (std::size_t c = 0; c < order.size(); ++c) order[c] = c;
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return wrap_phase(std::arg(centers[a])) < wrap_phase(std::arg(centers[b]));
      });

      ComplexMatrix reordered(size, size);
      Eigen::Index col = 0;
      Eigen::Index offset = start;
      for (std::size_t c : order) {
        const auto& members = clusters[c];
        for (Eigen::Index k : members) reordered.col(col++) = u.col(k);
        refined.emplace_back(offset, static_cast<Eigen::Index>(members.size()));
        offset += static_cast<Eigen::Index>(members.size());
      }
      basis.middleCols(start, size) = v * reordered;
    }
    blocks = std::move(refined);
  }

  SimultaneousEigen out;
  out.basis = basis;
  for (std::size_t idx = 0; idx < mats.size(); ++idx) {
    ComplexMatrix d = basis.adjoint() * mats[idx] * basis;
    std::vector<double> phases(static_cast<std::size_t>(dim));
    for (Eigen::Index k = 0; k < dim; ++k) {
      phases[static_cast<std::size_t>(k)] = wrap_phase(std::arg(d(k, k)));
      d(k, k) = 0.0;
    }
    if (const double off = d.norm(); !(off <= tol.central)) {
      throw NotCommuting("matrix " + std::to_string(idx) + " is not diagonal in the common basis (off-diagonal " +
                         std::to_string(off) + ")");
    }
    out.phases.push_back(std::move(phases));
  }
  return out;
}

ComplexMatrix random_su(int p, std::uint64_t seed) {
  if (p < 1) throw InvalidArgument("random_su: size must be positive");
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix a(p, p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      const double re = normal(engine);
      const double im = normal(engine);
      a(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(a);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < p; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  const Complex det = q.determinant();
  q.col(0) *= std::conj(det) / std::abs(det);
  return q;
}

std::vector<ComplexMatrix> random_su_factors(int p, int m, std::uint64_t seed) {
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int f = 0; f < m; ++f) out.push_back(random_su(p, derive_seed(seed, static_cast<std::uint64_t>(f))));
  return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double wrap_phase(double angle, double snap) {
  double wrapped = std::fmod(angle, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  if (wrapped >= kTwoPi - snap) wrapped = 0.0;
  return wrapped;
}

}  // namespace commtuple
