#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bosepoly {

/// Exact rational scalar used for all polytope arithmetic.
using Rat = mpq_class;

// Error taxonomy shared across modules.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NormalizationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DegeneracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SizeError : std::domain_error {
  using std::domain_error::domain_error;
};

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "3", "-1/3" or a plain decimal like "0.25" into an exact rational.
inline Rat parse_rational(const std::string& text) {
  if (text.empty()) throw NormalizationError("empty rational literal");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    Rat q;
    if (q.set_str(text, 10) != 0)
      throw NormalizationError("invalid rational literal: " + text);
    if (q.get_den() == 0)
      throw NormalizationError("zero denominator: " + text);
    q.canonicalize();
    return q;
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    Rat q;
    if (q.set_str(text, 10) != 0)
      throw NormalizationError("invalid rational literal: " + text);
    return q;
  }
  // Decimal: digits before and after the dot, exact power-of-ten denominator.
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const std::size_t frac_len = text.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+")
    throw NormalizationError("invalid decimal literal: " + text);
  mpz_class num;
  if (num.set_str(digits, 10) != 0)
    throw NormalizationError("invalid decimal literal: " + text);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Best rational approximation of x with denominator <= max_den
/// (continued-fraction convergent/semiconvergent selection).
inline Rat rationalize(double x, unsigned long long max_den = 1000000000000ULL) {
  if (max_den < 1) throw PreconditionError("denominator bound must be >= 1");
  Rat exact(x);  // doubles are exact binary rationals
  exact.canonicalize();
  const mpz_class bound(static_cast<unsigned long>(max_den));
  if (exact.get_den() <= bound) return exact;
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class n = exact.get_num(), d = exact.get_den();
  while (true) {
    mpz_class a = n / d;  // floor for positive d; n may be negative
    mpz_class r = n - a * d;
    if (r < 0) { a -= 1; r += d; }
    mpz_class q2 = q0 + a * q1;
    if (q2 > bound) {
      // Semiconvergent with the largest admissible partial quotient.
      mpz_class k = (bound - q0) / q1;
      Rat semi(p0 + k * p1, q0 + k * q1);
      semi.canonicalize();
      Rat conv(p1, q1);
      conv.canonicalize();
      if (q1 == 0) return semi;
      return abs(semi - exact) <= abs(conv - exact) ? semi : conv;
    }
    mpz_class p2 = p0 + a * p1;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    if (r == 0) {
      Rat conv(p1, q1);
      conv.canonicalize();
      return conv;
    }
    n = d;
    d = r;
  }
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Rat vec_sum(const std::vector<Rat>& v) {
  Rat s = 0;
  for (const auto& x : v) s += x;
  return s;
}

inline std::vector<Rat> sorted_desc(std::vector<Rat> v) {
  std::sort(v.begin(), v.end(), [](const Rat& a, const Rat& b) { return a > b; });
  return v;
}

/// Partial sums s_k = v_0 + ... + v_k.
inline std::vector<Rat> prefix_sums(const std::vector<Rat>& v) {
  std::vector<Rat> s(v.size());
  Rat acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    acc += v[i];
    s[i] = acc;
  }
  return s;
}

}  // namespace bosepoly
