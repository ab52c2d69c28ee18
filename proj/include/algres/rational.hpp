#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace algres {

/// Exact rational number. Backed by GMP; every operation leaves the value in
/// lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown for malformed user input (bad dimensions, unparsable literals, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws InputError otherwise.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }

/// Exact k-th root if one exists in Q.
bool exact_root(const Rational& value, unsigned k, Rational& root);

}  // namespace algres
