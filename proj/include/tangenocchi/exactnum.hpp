#pragma once

#include <optional>
#include <vector>

#include "tangenocchi/nat.hpp"

namespace tangenocchi::exactnum {

/// n! with small arguments memoized in a shared growable table. Arguments
/// above the memo window are delegated to GMP's factorial each call; caching
/// megabyte-sized factorials would pin unbounded memory.
Nat factorial(unsigned long n);

/// n!! = n(n-2)(n-4)... down to 1 or 2, with (-1)!! = 0!! = 1.
/// Rejects n < -1.
Nat double_factorial(long n);

/// n!/(r!(n-r)!) for r <= n, 0 for r > n.
Nat binomial(unsigned long n, unsigned long r);

/// n! / prod(parts_i!). Rejects sum(parts) != n.
Nat multinomial(unsigned long n, const std::vector<unsigned long>& parts);

/// Sum of the base-p digits of n. Rejects p < 2.
Nat digit_sum(const Nat& n, unsigned long p);

/// The p-adic valuation of n! by Legendre's formula. Both closed forms,
/// sum_i floor(n/p^i) and (n - digit_sum(n, p))/(p - 1), are evaluated and
/// compared on every call; a mismatch throws VerificationError. Rejects
/// non-prime p.
Nat legendre_valuation(const Nat& n, unsigned long p);

/// Trial division; intended for desk-scale arguments.
bool is_prime(unsigned long n);

/// How k >= 2 splits for the quotient congruence: a single prime, a proper
/// prime power, or a product of at least two distinct primes.
struct KClassification {
  enum class Kind { Prime, PrimePower, MultiplePrimeFactors };
  Kind kind;
  unsigned long k;
  unsigned long p = 0;  // set for Prime and PrimePower
  unsigned long t = 0;  // exponent, set for Prime (1) and PrimePower (>= 2)
};

KClassification classify_k(unsigned long k);

/// The congruence the generalized Genocchi quotients M are expected to
/// satisfy for n >= 1: M = 1 (mod p) when k = p prime, M = 1 (mod p^2) when
/// k = p^t with t >= 2, and M = 0 (mod k) otherwise.
struct Congruence {
  unsigned long modulus;
  unsigned long residue;
};

Congruence expected_congruence(unsigned long k);

/// Checks (pk+1)(pk+2)...(pk+p-1) = (p-1)! (mod p^2) for every
/// k in 0..k_max. Requires p >= 3 prime.
struct LemmaP2Report {
  unsigned long p;
  unsigned long k_max;
  bool pass;
  std::optional<unsigned long> first_failure;  // smallest failing k, if any
};

LemmaP2Report verify_lemma_p2(unsigned long p, unsigned long k_max);

/// Checks the coefficient identity
///   (k^2 n - kn + k)! / ((kn+1)! ((k-1)!)^(kn+1))
///     = (k^2 n - kn + k) * prod_{i=1}^{kn+1} C(i(k-1)-1, k-2),
/// including integrality of the left-hand side. Requires k >= 2, n >= 1.
struct CoeffIdentityReport {
  unsigned long k;
  unsigned long n;
  Nat factorial_form;
  Nat product_form;
  bool integral;
  bool pass;
};

CoeffIdentityReport verify_coeff_identity(unsigned long k, unsigned long n);

}  // namespace tangenocchi::exactnum
