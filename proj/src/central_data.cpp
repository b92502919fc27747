#include "commtuple/central_data.hpp"

#include <limits>
#include <string>

#include "commtuple/errors.hpp"

namespace commtuple {

bool is_prime(std::int64_t value) {
  if (value < 2) return false;
  for (std::int64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

int mod_inverse(int a, int p) {
  a = mod_p(a, p);
  if (a == 0) throw InvalidArgument("mod_inverse: zero has no inverse mod " + std::to_string(p));
  // extended Euclid
  int old_r = a, r = p, old_s = 1, s = 0;
  while (r != 0) {
    const int q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  return mod_p(old_s, p);
}

void GroupParams::validate() const {
  if (n < 1) throw InvalidArgument("n must be >= 1, got " + std::to_string(n));
  if (m < 1) throw InvalidArgument("m must be >= 1, got " + std::to_string(m));
  if (!is_prime(p)) throw InvalidArgument("p must be prime, got " + std::to_string(p));
}

AntisymMatrix::AntisymMatrix(int n, int p) : n_(n), p_(p) {
  if (n < 1) throw InvalidArgument("antisymmetric matrix size must be >= 1");
  if (!is_prime(p)) throw InvalidArgument("modulus must be prime, got " + std::to_string(p));
  a_.assign(static_cast<std::size_t>(n * n), 0);
}

AntisymMatrix AntisymMatrix::from_upper(int n, int p, std::span<const int> upper) {
  AntisymMatrix c(n, p);
  const auto expected = static_cast<std::size_t>(n * (n - 1) / 2);
  if (upper.size() != expected) {
    throw InvalidArgument("expected " + std::to_string(expected) + " upper entries, got " +
                          std::to_string(upper.size()));
  }
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) c.set(i, j, upper[idx++]);
  }
  return c;
}

void AntisymMatrix::set(int i, int j, int value) {
  const int v = mod_p(value, p_);
  a_[static_cast<std::size_t>(i * n_ + j)] = v;
  a_[static_cast<std::size_t>(j * n_ + i)] = mod_p(-v, p_);
}

bool AntisymMatrix::is_zero() const {
  for (int v : a_) {
    if (v != 0) return false;
  }
  return true;
}

std::vector<int> AntisymMatrix::upper() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n_ * (n_ - 1) / 2));
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) out.push_back((*this)(i, j));
  }
  return out;
}

bool AntisymMatrix::is_antisymmetric() const {
  for (int i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 0) return false;
    for (int j = 0; j < n_; ++j) {
      const int v = (*this)(i, j);
      if (v < 0 || v >= p_) return false;
      if (mod_p(v + (*this)(j, i), p_) != 0) return false;
    }
  }
  return true;
}

std::uint64_t antisym_count(int n, int p) {
  const int slots = n * (n - 1) / 2;
  std::uint64_t total = 1;
  for (int s = 0; s < slots; ++s) {
    if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(p)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= static_cast<std::uint64_t>(p);
  }
  return total;
}

AntisymMatrix antisym_at(int n, int p, std::uint64_t index) {
  AntisymMatrix c(n, p);
  // last slot is the least significant digit
  for (int i = n - 1; i >= 0; --i) {
    for (int j = n - 1; j > i; --j) {
      c.set(i, j, static_cast<int>(index % static_cast<std::uint64_t>(p)));
      index /= static_cast<std::uint64_t>(p);
    }
  }
  return c;
}

AntisymEnumerator::AntisymEnumerator(int n, int p) : AntisymEnumerator(n, p, 0, antisym_count(n, p)) {}

AntisymEnumerator::AntisymEnumerator(int n, int p, std::uint64_t first, std::uint64_t last)
    : current_(antisym_at(n, p, first)), position_(first), last_(last) {
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) slots_.emplace_back(i, j);
  }
}

void AntisymEnumerator::advance() {
  ++position_;
  if (position_ >= last_) return;
  const int p = current_.modulus();
  for (auto it = slots_.rbegin(); it != slots_.rend(); ++it) {
    const int v = current_(it->first, it->second) + 1;
    if (v < p) {
      current_.set(it->first, it->second, v);
      return;
    }
    current_.set(it->first, it->second, 0);
  }
}

std::vector<AntisymMatrix> enumerate_antisym(const GroupParams& params) {
  params.validate();
  std::vector<AntisymMatrix> out;
  for (AntisymEnumerator e(params.n, params.p); !e.done(); e.advance()) out.push_back(e.current());
  return out;
}

CaseTag case_of(const AntisymMatrix& c) {
  if (c.is_zero()) return {CaseTag::Kind::case1, 0};
  for (int i = 1; i < c.size(); ++i) {
    if (c(0, i) != 0) return {CaseTag::Kind::case3, i};
  }
  return {CaseTag::Kind::case2, 0};
}

AntisymMatrix delete_first(const AntisymMatrix& c) {
  if (c.size() < 2) throw InvalidArgument("delete_first needs n >= 2");
  AntisymMatrix out(c.size() - 1, c.modulus());
  for (int i = 1; i < c.size(); ++i) {
    for (int j = i + 1; j < c.size(); ++j) out.set(i - 1, j - 1, c(i, j));
  }
  return out;
}

std::vector<PivotCoordinates> pivot_coordinates(const AntisymMatrix& c) {
  const CaseTag tag = case_of(c);
  if (tag.kind != CaseTag::Kind::case3) throw InvalidArgument("pivot_coordinates needs a Case 3 matrix");
  const int p = c.modulus();
  const int pivot = tag.pivot;
  const int inv = mod_inverse(c(0, pivot), p);
  std::vector<PivotCoordinates> coords(static_cast<std::size_t>(c.size()));
  for (int k = 1; k < c.size(); ++k) {
    if (k == pivot) continue;
    coords[static_cast<std::size_t>(k)] = {mod_p(static_cast<std::int64_t>(c(pivot, k)) * inv, p),
                                           mod_p(static_cast<std::int64_t>(c(0, k)) * inv, p)};
  }
  return coords;
}

bool is_realizable(const AntisymMatrix& c) {
  const CaseTag tag = case_of(c);
  switch (tag.kind) {
    case CaseTag::Kind::case1:
      return true;
    case CaseTag::Kind::case2:
      return is_realizable(delete_first(c));
    case CaseTag::Kind::case3:
      break;
  }
  // The commutator of x0^-a y^b and x0^-a' y^b' in the Heisenberg group
  // generated by a pair with [x0, y] = omega^s is omega^(s (a' b - a b')).
  const int p = c.modulus();
  const int s = c(0, tag.pivot);
  const auto coords = pivot_coordinates(c);
  for (int j = 1; j < c.size(); ++j) {
    if (j == tag.pivot) continue;
    for (int k = j + 1; k < c.size(); ++k) {
      if (k == tag.pivot) continue;
      const auto& cj = coords[static_cast<std::size_t>(j)];
      const auto& ck = coords[static_cast<std::size_t>(k)];
      const std::int64_t forced = static_cast<std::int64_t>(s) * (ck.a * cj.b - cj.a * ck.b);
      if (mod_p(forced, p) != c(j, k)) return false;
    }
  }
  return true;
}

}  // namespace commtuple
