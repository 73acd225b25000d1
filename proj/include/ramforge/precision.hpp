#pragma once

#include <mpfr.h>

#include "ramforge/errors.hpp"

namespace rf {

// Decimal digits -> mantissa bits, with a fixed slack of 16 bits so that the
// last decimal digit of a freshly computed value is never a rounding casualty.
inline mpfr_prec_t digits_to_bits(long digits) {
  // log2(10) = 3.3219280948873623...
  return static_cast<mpfr_prec_t>(digits * 3.3219280948873626 + 1.0) + 16;
}

// A precision request: the caller wants target_digits correct decimal digits;
// guard_digits of extra working precision absorb summation and rounding error.
// Every operation evaluated under a context returns a value whose error is
// below 10^(-target_digits) * max(1, |value|).
struct PrecisionContext {
  long target_digits = 0;
  long guard_digits = 0;

  long working_digits() const { return target_digits + guard_digits; }
  mpfr_prec_t working_bits() const { return digits_to_bits(working_digits()); }
};

// guard = 10 + ceil(log10(target)): covers error accumulation of roughly
// N*ulp over the N-term sums this library evaluates.
inline PrecisionContext with_precision(long target_digits) {
  if (target_digits < 10)
    throw DomainError("with_precision: target_digits must be at least 10");
  long k = 0;
  for (long p = 1; p < target_digits; p *= 10) ++k;
  return PrecisionContext{target_digits, 10 + k};
}

}  // namespace rf
