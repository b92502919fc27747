#include "commtuple/counting.hpp"

#include <string>
#include <vector>

#include "commtuple/errors.hpp"
#include "commtuple/parallel.hpp"

namespace commtuple {

BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

ComponentCount count_closed_form(const GroupParams& params) {
  params.validate();
  const auto [n, m, p] = params;
  if (n == 1) return 1;
  const BigInt bp = p;
  const BigInt numerator = ipow(bp, static_cast<unsigned>((m - 1) * (n - 2))) *
                           (ipow(bp, static_cast<unsigned>(n)) - 1) *
                           (ipow(bp, static_cast<unsigned>(n - 1)) - 1);
  const BigInt denominator = bp * bp - 1;
  BigInt quotient, remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw InexactArithmetic("closed form numerator not divisible by p^2-1 at n=" + std::to_string(n));
  }
  return quotient + 1;
}

ComponentCount count_recurrence(const GroupParams& params) {
  params.validate();
  const auto [n, m, p] = params;
  if (n == 1) return 1;
  const BigInt bp = p;
  BigInt value = p;  // N(2)
  for (int k = 3; k <= n; ++k) {
    const auto shift = static_cast<unsigned>(m * (k - 2));
    value = ipow(bp, static_cast<unsigned>(m - 1)) * value + ipow(bp, shift + static_cast<unsigned>(k - 1)) -
            ipow(bp, shift) - ipow(bp, static_cast<unsigned>(m - 1)) + 1;
  }
  return value;
}

std::optional<int> components_per_class_exponent(const AntisymMatrix& c, int m) {
  const CaseTag tag = case_of(c);
  switch (tag.kind) {
    case CaseTag::Kind::case1:
      return 0;
    case CaseTag::Kind::case2: {
      const auto sub = components_per_class_exponent(delete_first(c), m);
      if (!sub) return std::nullopt;
      return (m - 1) + *sub;
    }
    case CaseTag::Kind::case3:
      if (!is_realizable(c)) return std::nullopt;
      return (m - 1) * (c.size() - 2);
  }
  return std::nullopt;
}

ComponentCount components_per_class(const AntisymMatrix& c, int m) {
  if (m < 1) throw InvalidArgument("m must be >= 1");
  const auto e = components_per_class_exponent(c, m);
  if (!e) return 0;
  return ipow(BigInt(c.modulus()), static_cast<unsigned>(*e));
}

ComponentCount count_enumeration(const GroupParams& params, std::uint64_t guard) {
  params.validate();
  const std::uint64_t total = antisym_count(params.n, params.p);
  if (total > guard) {
    throw SizeGuardExceeded("enumeration of " + std::to_string(total) + " matrices exceeds guard " +
                            std::to_string(guard));
  }
  // Per chunk: histogram of p-exponents, reduced exactly afterwards.
  const int max_exponent = (params.m - 1) * params.n + 1;
  std::vector<std::vector<std::uint64_t>> histograms(
      static_cast<std::size_t>(chunk_count(total)),
      std::vector<std::uint64_t>(static_cast<std::size_t>(max_exponent + 1), 0));
  parallel_chunks(total, [&](int chunk, std::uint64_t first, std::uint64_t last) {
    auto& hist = histograms[static_cast<std::size_t>(chunk)];
    for (AntisymEnumerator e(params.n, params.p, first, last); !e.done(); e.advance()) {
      if (const auto exponent = components_per_class_exponent(e.current(), params.m)) {
        ++hist[static_cast<std::size_t>(*exponent)];
      }
    }
  });
  BigInt sum = 0;
  const BigInt bp = params.p;
  for (const auto& hist : histograms) {
    for (std::size_t e = 0; e < hist.size(); ++e) {
      if (hist[e] != 0) sum += BigInt(hist[e]) * ipow(bp, static_cast<unsigned>(e));
    }
  }
  return sum;
}

ComponentCount torres_giese(int n) {
  if (n < 1) throw InvalidArgument("torres_giese needs n >= 1");
  const BigInt two = 2, four = 4;
  BigInt numerator;
  BigInt denominator;
  if (n % 2 == 0) {
    numerator = ipow(four, static_cast<unsigned>(n)) - 3 * ipow(two, static_cast<unsigned>(n)) + 2;
    denominator = 6;
  } else {
    // (2/3)(4^(n-1) - 1) - 2^(n-1) + 1 over the common denominator 3
    numerator = 2 * (ipow(four, static_cast<unsigned>(n - 1)) - 1) -
                3 * (ipow(two, static_cast<unsigned>(n - 1)) - 1);
    denominator = 3;
  }
  BigInt quotient, remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) throw InexactArithmetic("torres_giese: inexact division at n=" + std::to_string(n));
  return quotient;
}

ComponentCount count_rep_components(const GroupParams& params) { return count_closed_form(params); }

}  // namespace commtuple
