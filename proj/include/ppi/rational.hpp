#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <string>
#include <string_view>

namespace ppi {

using Rational = boost::multiprecision::mpq_rational;

// Parses "3/4", "-2", "0.375" or "1e-3". Decimal strings are converted
// exactly (0.1 becomes 1/10, not the nearest double).
Rational parse_rational(std::string_view text);

// Exact binary value of a finite double.
Rational rational_from_double(double x);

std::string to_string(const Rational& q);

inline double to_double(double x) { return x; }
inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline Rational floor(const Rational& q) {
  using boost::multiprecision::mpz_int;
  mpz_int num = boost::multiprecision::numerator(q);
  mpz_int den = boost::multiprecision::denominator(q);
  mpz_int quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num) quot -= 1;
  return Rational(quot);
}

// Fractional part in [0,1).
inline double frac(double x) { return x - std::floor(x); }
inline Rational frac(const Rational& q) { return q - floor(q); }

// Per-scalar tolerances. Exact arithmetic compares exactly.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  // atoms closer than this are merged on construction
  static double merge_eps() { return 1e-12; }
  // weights below this are dropped
  static double drop_eps() { return 1e-15; }
  static double sum_tol() { return 1e-12; }
  // Bayes posteriors closer than this (max-norm) are one belief
  static double posterior_eps() { return 1e-10; }
  static double from(double x) { return x; }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational merge_eps() { return Rational(0); }
  static Rational drop_eps() { return Rational(0); }
  static Rational sum_tol() { return Rational(0); }
  static Rational posterior_eps() { return Rational(0); }
  static Rational from(double x) { return rational_from_double(x); }
};

inline double abs_value(double x) { return std::fabs(x); }
inline Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace ppi
