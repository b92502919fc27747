#pragma once

// Component counts N(n, m, p) of Hom(Z^n, G_{m,p}), computed three ways:
// closed form, recurrence on n, and a sum of per-class counts over every
// commutator-class matrix.

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "commtuple/central_data.hpp"

namespace commtuple {

using BigInt = boost::multiprecision::cpp_int;
using ComponentCount = BigInt;

inline constexpr std::uint64_t kEnumerationGuard = 10'000'000;

BigInt ipow(const BigInt& base, unsigned exponent);

ComponentCount count_closed_form(const GroupParams& params);
ComponentCount count_recurrence(const GroupParams& params);

/// Number of components of Hom(Z^n, G_{m,p}) lying over class c, as a power of
/// p: returns the exponent e with count p^e, or nullopt when no almost
/// commuting tuple realizes c (count 0).
std::optional<int> components_per_class_exponent(const AntisymMatrix& c, int m);

ComponentCount components_per_class(const AntisymMatrix& c, int m);

/// Sum of components_per_class over all p^(n(n-1)/2) matrices. Throws
/// SizeGuardExceeded when that number exceeds `guard`.
ComponentCount count_enumeration(const GroupParams& params, std::uint64_t guard = kEnumerationGuard);

/// Components of Hom(Z^n, SO(3)) away from the trivial tuple, by the
/// parity-split formula.
ComponentCount torres_giese(int n);

/// Path components of Rep(Z^n, G_{m,p}); equals the Hom count.
ComponentCount count_rep_components(const GroupParams& params);

}  // namespace commtuple
