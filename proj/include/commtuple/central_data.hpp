#pragma once

// Commutator-class matrices over Z/p.
//
// Entries are stored additively: a(i, j) = k means the commutator of the
// i-th and j-th generators is omega^k * I with omega = exp(2 pi i / p).
// Indices are 0-based throughout the library; generator 0 plays the role of
// "the first generator" in the case analysis.

#include <cstdint>
#include <span>
#include <vector>

namespace commtuple {

bool is_prime(std::int64_t value);

/// Inverse of a modulo prime p; a must be nonzero mod p.
int mod_inverse(int a, int p);

/// Reduces value into [0, p).
inline int mod_p(std::int64_t value, int p) {
  auto r = static_cast<int>(value % p);
  return r < 0 ? r + p : r;
}

struct GroupParams {
  int n = 1;  // tuple length
  int m = 1;  // number of SU(p) factors in the central product
  int p = 2;  // prime

  /// Throws InvalidArgument unless n >= 1, m >= 1 and p is prime.
  void validate() const;

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

class AntisymMatrix {
 public:
  AntisymMatrix() = default;
  /// Zero matrix of size n over Z/p.
  AntisymMatrix(int n, int p);

  /// Builds from the strictly-upper-triangular entries in row-major order.
  static AntisymMatrix from_upper(int n, int p, std::span<const int> upper);

  int size() const { return n_; }
  int modulus() const { return p_; }

  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }

  /// Sets a(i, j) = value mod p and a(j, i) = -value mod p; i != j.
  void set(int i, int j, int value);

  bool is_zero() const;
  std::vector<int> upper() const;

  /// True when the stored entries satisfy the antisymmetry invariants.
  bool is_antisymmetric() const;

  friend bool operator==(const AntisymMatrix&, const AntisymMatrix&) = default;

 private:
  int n_ = 0;
  int p_ = 2;
  std::vector<int> a_;
};

/// Number of antisymmetric n x n matrices over Z/p, i.e. p^(n(n-1)/2).
/// Saturates at UINT64_MAX.
std::uint64_t antisym_count(int n, int p);

/// The matrix at position `index` in the lexicographic enumeration order.
AntisymMatrix antisym_at(int n, int p, std::uint64_t index);

/// Lexicographic odometer over strictly-upper-triangular entries; the last
/// entry varies fastest. Advances in place without allocating.
///
///   for (AntisymEnumerator e(n, p); !e.done(); e.advance()) use(e.current());
class AntisymEnumerator {
 public:
  AntisymEnumerator(int n, int p);
  /// Enumerates positions [first, last) of the full order.
  AntisymEnumerator(int n, int p, std::uint64_t first, std::uint64_t last);

  bool done() const { return position_ >= last_; }
  const AntisymMatrix& current() const { return current_; }
  std::uint64_t position() const { return position_; }
  void advance();

 private:
  AntisymMatrix current_;
  std::vector<std::pair<int, int>> slots_;
  std::uint64_t position_ = 0;
  std::uint64_t last_ = 0;
};

/// All antisymmetric matrices for (params.n, params.p) in enumeration order.
std::vector<AntisymMatrix> enumerate_antisym(const GroupParams& params);

struct CaseTag {
  enum class Kind { case1, case2, case3 };
  Kind kind = Kind::case1;
  /// For case3: the minimal index i >= 1 with a(0, i) != 0. Otherwise 0.
  int pivot = 0;

  friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

CaseTag case_of(const AntisymMatrix& c);

/// Removes row 0 and column 0. Throws InvalidArgument for n = 1.
AntisymMatrix delete_first(const AntisymMatrix& c);

/// Exponents expressing generator k through the Case 3 pivot pair:
/// x_k = w_k * x_0^(-a) * x_i^(b) with a(0,k) = s*b and a(i,k) = s*a, where
/// s = a(0, i) is the pivot commutator exponent.
struct PivotCoordinates {
  int a = 0;
  int b = 0;
};

/// Per-generator coordinates for a Case 3 matrix (entries for 0 and the pivot
/// are left at zero). Throws InvalidArgument if c is not Case 3.
std::vector<PivotCoordinates> pivot_coordinates(const AntisymMatrix& c);

/// Whether some almost commuting tuple has commutator class c.
///
/// Case 1 is always realizable. Case 3 requires the entries not involving
/// generator 0 or the pivot to be the ones forced by the pivot coordinates;
/// Case 2 reduces to delete_first(c).
bool is_realizable(const AntisymMatrix& c);

}  // namespace commtuple
