#include "commtuple/cohomology.hpp"

#include <cctype>
#include <functional>
#include <sstream>

#include "commtuple/errors.hpp"

namespace commtuple {

namespace {

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

// 1 - c t^degree
GradedSeries one_minus(const Rational& c, int degree) {
  return GradedSeries::constant(1) - GradedSeries::monomial(c, degree);
}

}  // namespace

GradedSeries::GradedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

GradedSeries GradedSeries::constant(const Rational& c) { return GradedSeries({c}); }

GradedSeries GradedSeries::monomial(const Rational& c, int degree) {
  if (degree < 0) throw InvalidArgument("negative degree");
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree + 1));
  coeffs.back() = c;
  return GradedSeries(std::move(coeffs));
}

void GradedSeries::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational GradedSeries::coeff(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(degree)];
}

std::map<int, Rational> GradedSeries::sparse() const {
  std::map<int, Rational> out;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    if (coeffs_[d] != 0) out.emplace(static_cast<int>(d), coeffs_[d]);
  }
  return out;
}

GradedSeries GradedSeries::operator+(const GradedSeries& other) const {
  std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t d = 0; d < out.size(); ++d) out[d] = coeff(static_cast<int>(d)) + other.coeff(static_cast<int>(d));
  return GradedSeries(std::move(out));
}

GradedSeries GradedSeries::operator-(const GradedSeries& other) const { return *this + other * Rational(-1); }

GradedSeries GradedSeries::operator*(const GradedSeries& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return GradedSeries(std::move(out));
}

GradedSeries GradedSeries::operator*(const Rational& scalar) const {
  std::vector<Rational> out = coeffs_;
  for (auto& c : out) c *= scalar;
  return GradedSeries(std::move(out));
}

GradedSeries GradedSeries::pow(unsigned exponent) const {
  GradedSeries result = constant(1);
  for (unsigned e = 0; e < exponent; ++e) result = result * *this;
  return result;
}

GradedSeries GradedSeries::divide_exact(const GradedSeries& divisor) const {
  if (divisor.is_zero()) throw InvalidArgument("division by the zero series");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) throw InexactArithmetic("series division leaves a remainder");
  std::vector<Rational> remainder = coeffs_;
  std::vector<Rational> quotient(static_cast<std::size_t>(degree() - divisor.degree() + 1));
  const Rational& lead = divisor.coeffs_.back();
  for (int d = degree(); d >= divisor.degree(); --d) {
    const Rational q = remainder[static_cast<std::size_t>(d)] / lead;
    if (q == 0) continue;
    const int shift = d - divisor.degree();
    quotient[static_cast<std::size_t>(shift)] = q;
    for (int k = 0; k <= divisor.degree(); ++k) {
      remainder[static_cast<std::size_t>(shift + k)] -= q * divisor.coeffs_[static_cast<std::size_t>(k)];
    }
  }
  for (const auto& r : remainder) {
    if (r != 0) throw InexactArithmetic("series division leaves a remainder");
  }
  return GradedSeries(std::move(quotient));
}

Rational GradedSeries::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

bool GradedSeries::has_nonnegative_integer_coeffs() const {
  for (const auto& c : coeffs_) {
    if (c < 0 || !is_integer(c)) return false;
  }
  return true;
}

std::string GradedSeries::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    Rational c = coeffs_[d];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (c < 0) c = -c;
    first = false;
    if (d == 0 || c != 1) out << c;
    if (d >= 1) out << "t";
    if (d >= 2) out << "^" << d;
  }
  return out.str();
}

GradedSeries parse_series(const std::string& text) {
  GradedSeries result;
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> std::string {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  };
  skip_spaces();
  if (text.substr(pos) == "0") return result;
  int sign = 1;
  if (pos < text.size() && text[pos] == '-') {
    sign = -1;
    ++pos;
  }
  while (true) {
    skip_spaces();
    Rational c = 1;
    const std::string num = read_int();
    if (!num.empty()) {
      c = Rational(boost::multiprecision::cpp_int(num));
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        const std::string den = read_int();
        if (den.empty()) throw InvalidArgument("bad series term in '" + text + "'");
        c /= Rational(boost::multiprecision::cpp_int(den));
      }
    }
    int degree = 0;
    if (pos < text.size() && text[pos] == 't') {
      ++pos;
      degree = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        const std::string exp = read_int();
        if (exp.empty()) throw InvalidArgument("bad exponent in '" + text + "'");
        degree = std::stoi(exp);
      }
    } else if (num.empty()) {
      throw InvalidArgument("bad series term in '" + text + "'");
    }
    result = result + GradedSeries::monomial(c * sign, degree);
    skip_spaces();
    if (pos >= text.size()) break;
    if (text[pos] == '+') {
      sign = 1;
    } else if (text[pos] == '-') {
      sign = -1;
    } else {
      throw InvalidArgument("unexpected character in '" + text + "'");
    }
    ++pos;
  }
  return result;
}

std::vector<CycleType> partitions(int size) {
  if (size < 1 || size > 12) throw InvalidArgument("partitions: size must be in [1, 12]");
  std::uint64_t factorial = 1;
  for (int k = 2; k <= size; ++k) factorial *= static_cast<std::uint64_t>(k);

  std::vector<CycleType> out;
  std::vector<int> current;
  std::function<void(int, int)> recurse = [&](int remaining, int max_part) {
    if (remaining == 0) {
      std::uint64_t denom = 1;
      std::size_t i = 0;
      while (i < current.size()) {
        std::size_t j = i;
        while (j < current.size() && current[j] == current[i]) ++j;
        const auto mult = static_cast<std::uint64_t>(j - i);
        for (std::uint64_t r = 0; r < mult; ++r) denom *= static_cast<std::uint64_t>(current[i]) * (r + 1);
        i = j;
      }
      out.push_back({current, factorial / denom});
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      recurse(remaining - part, part);
      current.pop_back();
    }
  };
  recurse(size, size);
  return out;
}

WeylData weyl_data(int p) {
  if (!is_prime(p)) throw InvalidArgument("weyl_data: p must be prime");
  WeylData data{p, {}};
  for (int d = 2; d <= p; ++d) data.degrees.push_back(d);
  return data;
}

GradedSeries coinvariant_trace(const CycleType& lambda, int p) {
  GradedSeries numerator = one_minus(1, 2);
  for (int d : weyl_data(p).degrees) numerator = numerator * one_minus(1, 2 * d);
  GradedSeries denominator = GradedSeries::constant(1);
  int total = 0;
  for (int part : lambda.parts) {
    denominator = denominator * one_minus(1, 2 * part);
    total += part;
  }
  if (total != p) throw InvalidArgument("cycle type does not partition p");
  return numerator.divide_exact(denominator);
}

GradedSeries exterior_trace(const CycleType& lambda, int n) {
  if (n < 0) throw InvalidArgument("exterior_trace: n must be >= 0");
  // det(1 + t w) on the permutation representation, then strip the trivial summand.
  GradedSeries perm = GradedSeries::constant(1);
  for (int part : lambda.parts) perm = perm * one_minus(part % 2 == 0 ? 1 : -1, part);
  const GradedSeries reflection = perm.divide_exact(GradedSeries({1, 1}));
  return reflection.pow(static_cast<unsigned>(n));
}

GradedSeries poincare_identity_component(const GroupParams& params) {
  params.validate();
  if (params.p > 7) throw InvalidArgument("poincare_identity_component supports p <= 7");
  const auto types = partitions(params.p);
  std::uint64_t order = 0;
  GradedSeries sum;
  for (const auto& lambda : types) {
    order += lambda.class_size;
    sum = sum + coinvariant_trace(lambda, params.p) * exterior_trace(lambda, params.n) *
                    Rational(static_cast<long long>(lambda.class_size));
  }
  const GradedSeries single = sum * Rational(1, static_cast<long long>(order));
  if (!single.has_nonnegative_integer_coeffs()) {
    throw InexactArithmetic("invariant average is not a nonnegative integer series: " + single.to_string());
  }
  return single.pow(static_cast<unsigned>(params.m));
}

GradedSeries poincare_nonidentity_component(const GroupParams& params) {
  params.validate();
  if (params.n < 2) throw InvalidArgument("non-identity components exist only for n >= 2");
  GradedSeries su = GradedSeries::constant(1);
  for (int i = 2; i <= params.p; ++i) su = su * (GradedSeries::constant(1) + GradedSeries::monomial(1, 2 * i - 1));
  return su.pow(static_cast<unsigned>(params.m));
}

}  // namespace commtuple
