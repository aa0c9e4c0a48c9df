#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cardguess {

// Every probability in this library is a dyadic rational (denominator a
// power of two). mpq_class keeps values reduced; heavy kernels work on
// raw integer numerators over a shared power-of-two scale and convert at
// the API boundary.
using Rational = mpq_class;
using BigInt = mpz_class;

// Thrown when a request exceeds the exact-arithmetic resource budget.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// C(n, k), zero when k < 0 or k > n.
BigInt binomial(long n, long k);

// 2^e for e >= 0.
BigInt pow2(unsigned long e);

// num / 2^scale, reduced.
Rational dyadic(const BigInt& num, unsigned long scale);

// Reduced "p/q", or plain "p" when the value is an integer.
std::string fraction_string(const Rational& value);

// Inverse of fraction_string. Rejects malformed input.
Rational parse_fraction(const std::string& text);

double to_double(const Rational& value);

}  // namespace cardguess
