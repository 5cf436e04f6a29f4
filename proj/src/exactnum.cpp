#include "tangenocchi/exactnum.hpp"

#include <mutex>

namespace tangenocchi::exactnum {

namespace {

// Shared memo table for small factorials; larger arguments go straight to
// GMP. 4096 caps the table at a few MB while covering every hot path
// (multinomials inside the L recurrence, hook products, class tables).
constexpr unsigned long kFactorialMemoLimit = 4096;

class FactorialCache {
 public:
  Nat get(unsigned long n) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (table_.empty()) table_.emplace_back(1);
    while (table_.size() <= n)
      table_.push_back(table_.back() * static_cast<unsigned long>(table_.size()));
    return table_[n];
  }

 private:
  std::mutex mutex_;
  std::vector<Nat> table_;
};

FactorialCache& factorial_cache() {
  static FactorialCache cache;
  return cache;
}

}  // namespace

Nat factorial(unsigned long n) {
  if (n <= kFactorialMemoLimit) return factorial_cache().get(n);
  Nat r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Nat double_factorial(long n) {
  if (n < -1) throw std::invalid_argument("double_factorial: n < -1");
  if (n <= 0) return 1;
  Nat r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Nat binomial(unsigned long n, unsigned long r) {
  if (r > n) return 0;
  Nat b;
  mpz_bin_uiui(b.get_mpz_t(), n, r);
  return b;
}

Nat multinomial(unsigned long n, const std::vector<unsigned long>& parts) {
  unsigned long sum = 0;
  for (unsigned long p : parts) sum += p;
  if (sum != n)
    throw std::invalid_argument("multinomial: parts sum to " +
                                std::to_string(sum) + ", expected " +
                                std::to_string(n));
  Nat denom = 1;
  for (unsigned long p : parts) denom *= factorial(p);
  return div_exact(factorial(n), denom);
}

Nat digit_sum(const Nat& n, unsigned long p) {
  if (p < 2) throw std::invalid_argument("digit_sum: base must be >= 2");
  if (sgn(n) < 0) throw std::invalid_argument("digit_sum: negative input");
  Nat sum = 0;
  Nat t = n;
  while (sgn(t) > 0) sum += mpz_fdiv_q_ui(t.get_mpz_t(), t.get_mpz_t(), p);
  return sum;
}

Nat legendre_valuation(const Nat& n, unsigned long p) {
  if (!is_prime(p))
    throw std::invalid_argument("legendre_valuation: " + std::to_string(p) +
                                " is not prime");
  if (sgn(n) < 0) throw std::invalid_argument("legendre_valuation: negative n");

  Nat floor_sum = 0;
  Nat t = n;
  while (sgn(t) > 0) {
    mpz_fdiv_q_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    floor_sum += t;
  }

  Nat digit_form = (n - digit_sum(n, p)) / (p - 1);
  if (floor_sum != digit_form)
    throw VerificationError(
        "Legendre forms disagree at n=" + to_decimal(n) + " p=" +
        std::to_string(p) + ": " + to_decimal(floor_sum) + " vs " +
        to_decimal(digit_form));
  return floor_sum;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

KClassification classify_k(unsigned long k) {
  if (k < 2) throw std::invalid_argument("classify_k: k must be >= 2");
  unsigned long rest = k;
  unsigned long first_prime = 0;
  unsigned long exponent = 0;
  for (unsigned long d = 2; d * d <= rest; ++d) {
    if (rest % d != 0) continue;
    first_prime = d;
    while (rest % d == 0) {
      rest /= d;
      ++exponent;
    }
    break;
  }
  if (first_prime == 0) return {KClassification::Kind::Prime, k, k, 1};
  if (rest != 1)  // a second distinct prime remains
    return {KClassification::Kind::MultiplePrimeFactors, k, 0, 0};
  if (exponent == 1) return {KClassification::Kind::Prime, k, first_prime, 1};
  return {KClassification::Kind::PrimePower, k, first_prime, exponent};
}

Congruence expected_congruence(unsigned long k) {
  KClassification c = classify_k(k);
  switch (c.kind) {
    case KClassification::Kind::Prime:
      return {c.p, 1};
    case KClassification::Kind::PrimePower:
      return {c.p * c.p, 1};
    case KClassification::Kind::MultiplePrimeFactors:
      return {k, 0};
  }
  throw std::logic_error("classify_k: unreachable");
}

LemmaP2Report verify_lemma_p2(unsigned long p, unsigned long k_max) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("verify_lemma_p2: requires a prime p >= 3");
  const Nat p2 = Nat(p) * p;
  const Nat target = factorial(p - 1) % p2;
  for (unsigned long k = 0; k <= k_max; ++k) {
    Nat prod = 1;
    for (unsigned long j = 1; j <= p - 1; ++j) {
      prod *= Nat(p) * k + j;
      prod %= p2;
    }
    if (prod != target) return {p, k_max, false, k};
  }
  return {p, k_max, true, std::nullopt};
}

CoeffIdentityReport verify_coeff_identity(unsigned long k, unsigned long n) {
  if (k < 2) throw std::invalid_argument("verify_coeff_identity: k < 2");
  if (n < 1) throw std::invalid_argument("verify_coeff_identity: n < 1");
  const unsigned long top = k * k * n - k * n + k;

  CoeffIdentityReport report{k, n, 0, 0, false, false};

  Nat denom = factorial(k * n + 1) * pow_nat(factorial(k - 1), k * n + 1);
  report.integral = divides(denom, factorial(top));
  if (report.integral) report.factorial_form = div_exact(factorial(top), denom);

  Nat prod = top;
  for (unsigned long i = 1; i <= k * n + 1; ++i)
    prod *= binomial(i * (k - 1) - 1, k - 2);
  report.product_form = prod;

  report.pass = report.integral && report.factorial_form == report.product_form;
  return report;
}

}  // namespace tangenocchi::exactnum
