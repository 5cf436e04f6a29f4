#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tangenocchi {

/// Arbitrary-precision integer. Every operation in this library keeps its
/// values non-negative; arithmetic is always exact.
using Nat = mpz_class;

/// A configured resource bound was exceeded (enumeration size, factorial
/// argument, recurrence work). Maps to CLI exit code 3.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerically checked identity failed. Throwing this means a divisibility
/// or closed-form equation that is supposed to hold did not hold for some
/// input. Maps to CLI exit code 1.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_decimal(const Nat& v) { return v.get_str(10); }

inline Nat nat_from_string(const std::string& s) {
  Nat v;
  if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("not a decimal integer: \"" + s + "\"");
  return v;
}

inline bool divides(const Nat& divisor, const Nat& value) {
  return mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t()) != 0;
}

/// Exact quotient value / divisor. The caller is expected to have
/// established divisibility; a non-exact division here is a bug.
inline Nat div_exact(const Nat& value, const Nat& divisor) {
  if (!divides(divisor, value))
    throw std::logic_error("inexact division: " + to_decimal(value) + " / " +
                           to_decimal(divisor));
  Nat q;
  mpz_divexact(q.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
  return q;
}

inline Nat pow_nat(const Nat& base, unsigned long exp) {
  Nat r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

}  // namespace tangenocchi
