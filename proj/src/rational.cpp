#include "ppi/rational.hpp"

#include "ppi/errors.hpp"

#include <cctype>

namespace ppi {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw DomainError("not a rational number: '" + std::string(s) + "'");
  Rational r{boost::multiprecision::mpz_int(std::string(s))};
  return negative ? Rational(-r) : r;
}

Rational pow10(long e) {
  Rational r(1);
  for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= 10;
  return e < 0 ? Rational(1 / r) : r;
}

Rational parse_decimal(std::string_view s) {
  long exponent = 0;
  if (auto pos = s.find_first_of("eE"); pos != std::string_view::npos) {
    Rational e = parse_integer(s.substr(pos + 1));
    exponent = boost::multiprecision::numerator(e).convert_to<long>();
    s = s.substr(0, pos);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  long scale = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
    scale = static_cast<long>(s.size() - dot - 1);
  } else {
    digits = std::string(s);
  }
  if (!all_digits(digits)) throw DomainError("not a rational number: '" + std::string(s) + "'");
  Rational r{boost::multiprecision::mpz_int(digits)};
  r *= pow10(exponent - scale);
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw DomainError("empty rational literal");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_integer(text.substr(0, slash));
    Rational den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(text);
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite value cannot be made rational");
  return Rational(x);
}

std::string to_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return q.str();
}

}  // namespace ppi
