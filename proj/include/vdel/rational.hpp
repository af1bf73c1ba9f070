#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace vdel {

using Rational = mpq_class;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Canonical p/q (the two-argument mpq_class constructor does not reduce).
inline mpq_class ratio(long p, long q) {
  mpq_class r(p, q);
  r.canonicalize();
  return r;
}

#define VDEL_CHECK(cond, msg)                                                  \
  do {                                                                         \
    if (!(cond)) throw ::vdel::InternalError(std::string("check failed: ") + (msg)); \
  } while (0)

// Accepts "p/q", integers, and plain decimals with optional exponent
// ("0.25", "-1.5e-3"). The result is always canonical.
inline Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw InputError("empty rational");
  Rational r;
  bool decimal = s.find_first_of(".eE") != std::string::npos && s.find('/') == std::string::npos;
  if (!decimal) {
    for (size_t i = 0; i < s.size(); ++i) {
      char ch = s[i];
      bool ok = std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' ||
                ((ch == '-' || ch == '+') && (i == 0 || s[i - 1] == '/'));
      if (!ok) throw InputError("bad rational: " + text);
    }
    if (s[0] == '+') s.erase(0, 1);
    if (r.set_str(s, 10) != 0) throw InputError("bad rational: " + text);
    if (r.get_den() == 0) throw InputError("zero denominator: " + text);
    r.canonicalize();
    return r;
  }
  size_t epos = s.find_first_of("eE");
  std::string mant = s.substr(0, epos);
  long exp10 = 0;
  if (epos != std::string::npos) {
    std::string e = s.substr(epos + 1);
    if (e.empty()) throw InputError("bad exponent: " + text);
    try {
      size_t used = 0;
      exp10 = std::stol(e, &used);
      if (used != e.size()) throw InputError("bad exponent: " + text);
    } catch (const std::logic_error&) {
      throw InputError("bad exponent: " + text);
    }
    if (exp10 > 4000 || exp10 < -4000) throw InputError("exponent out of range: " + text);
  }
  bool neg = false;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    neg = mant[0] == '-';
    mant.erase(0, 1);
  }
  size_t dot = mant.find('.');
  std::string digits = mant;
  long frac = 0;
  if (dot != std::string::npos) {
    digits = mant.substr(0, dot) + mant.substr(dot + 1);
    frac = long(mant.size() - dot - 1);
  }
  if (digits.empty()) throw InputError("bad rational: " + text);
  for (char ch : digits)
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw InputError("bad rational: " + text);
  mpz_class num(digits, 10);
  long shift = exp10 - frac;
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  if (shift >= 0)
    r = Rational(num * p10);
  else
    r = Rational(num, p10);
  r.canonicalize();
  if (neg) r = -r;
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

// Dyadic bounds lo <= log2(n) <= hi, exact when n is a power of two.
// Thresholds of the form 1/log n are computed from hi (conservative for the
// low-value invariants), rescaling factors 1 + k/log n from lo.
inline std::pair<Rational, Rational> log2_bounds(long n) {
  if (n < 1) n = 1;
  if ((n & (n - 1)) == 0) {
    long k = 0;
    while ((1L << k) < n) ++k;
    return {Rational(k), Rational(k)};
  }
  const long scale = 1L << 24;
  long double l = std::log2(static_cast<long double>(n));
  auto lo = static_cast<long>(std::floor(l * scale)) - 1;
  auto hi = static_cast<long>(std::ceil(l * scale)) + 1;
  return {ratio(lo, scale), ratio(hi, scale)};
}

inline Rational rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational rmin(const Rational& a, const Rational& b) { return b < a ? b : a; }

} // namespace vdel
