#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tangenocchi/budgets.hpp"
#include "tangenocchi/nat.hpp"

namespace tangenocchi::series {

enum class SeqKind { Tangent, Genocchi, L, M, FussCatalan, WeightedF };

/// A named exact integer sequence together with its index convention:
/// entry i of Tangent is T_{2i+1}, of Genocchi G_{2i+2}, of L (arity k)
/// L_{ki+1}, of M the quotient M_{(k^2-k)i+k}, of FussCatalan C_k(i), and of
/// WeightedF the weighted sum f(i).
struct SeqRecord {
  SeqKind kind;
  unsigned k;
  std::vector<Nat> values;

  std::string column_label() const;
  std::string index_label(std::size_t i) const;
};

/// T_{2n+1} for n = 0..n_max, extracted from the power-series solution of
/// phi' = 1 + phi^2 (and therefore cross-checked against the multinomial
/// recurrence; see phi_coefficients).
SeqRecord tangent_numbers(unsigned n_max);

/// G_{2n+2} = (n+1) T_{2n+1} / 2^(2n) for n = 0..n_max. An inexact division
/// throws VerificationError: it would contradict the divisibility theorem.
SeqRecord genocchi_numbers(unsigned n_max);

/// The number L_{kn+1} of increasing labelled complete k-ary trees, by the
/// multinomial recurrence over compositions of n-1 into k parts (iterated in
/// lexicographically increasing order). Work is metered against
/// budgets.max_recurrence_ops.
SeqRecord l_numbers(unsigned k, unsigned n_max, const Budgets& budgets = {});

/// The generalized Genocchi quotient
///   M_{k^2 n-kn+k} = (k^2 n-kn+k)! L_{kn+1} / ((k!)^(kn+1) (kn+1)!)
/// for n = 0..n_max, with the division checked exact.
SeqRecord m_numbers(unsigned k, unsigned n_max, const Budgets& budgets = {});

/// Fuss-Catalan numbers C_k(n) = (kn)!/(n!(kn-n+1)!) as a sequence record.
SeqRecord fuss_catalan_numbers(unsigned k, unsigned n_max);

/// Closed-form weighted sums f(0..n_max) as a sequence record.
SeqRecord weighted_f_numbers(unsigned k, unsigned n_max);

Nat fuss_catalan(unsigned k, unsigned n);

/// The weighted Genocchi number f(n), evaluated through both closed forms:
///   (k^2 n-kn+k)!/((k!)^(kn-n+1)(kn-n+1)!) * (kn)!/((k!)^n n!)
/// and the binomial product
///   prod_{i=0}^{kn-n} C(ik+k-1, k-1) * prod_{j=0}^{n-1} C(jk+k-1, k-1).
/// The two must agree (VerificationError otherwise); for k = 2 the value is
/// additionally checked against (2n-1)!! (2n+1)!!.
Nat f_closed_form(unsigned k, unsigned n);

/// Exponential-coefficient view of a formal power series: egf[m] is the
/// integer multiplying x^m/m!. Off-support entries are zero.
struct SeriesCoeffs {
  enum class Kind { Phi, Psi };
  Kind kind;
  unsigned k;
  unsigned order;
  std::vector<Nat> egf;  // size order+1
};

/// Power-series solution of phi'(x) = 1 + phi^k(x), phi(0) = 0, to the given
/// order. Support entries (exponents kn+1) are verified against l_numbers;
/// any other nonzero entry, or a support mismatch, throws VerificationError.
SeriesCoeffs phi_coefficients(unsigned k, unsigned order,
                              const Budgets& budgets = {});

/// psi(x) = x * phi(x^(k-1)/k!), expanded by exact rational substitution.
/// Verifies that the integer at each support exponent (k^2-k)n+k equals
/// m_numbers, that every off-support coefficient vanishes, and that
///   x psi' - psi = ((k-1)/k!) (x^k + psi^k)
/// holds coefficient-wise through the requested order.
SeriesCoeffs psi_coefficients(unsigned k, unsigned order,
                              const Budgets& budgets = {});

struct PeriodCandidate {
  std::size_t period;
  std::size_t repetitions;
};

/// Smallest p >= 1 with seq[i] == seq[i+p] for all valid i, reported only
/// when the sequence covers at least two full periods. Purely empirical.
std::optional<PeriodCandidate> detect_period(std::span<const unsigned long> seq);

/// Residues m_n = M_{k^2 n-kn+k} mod k, computed through the binomial
/// product for f(n) (cheap path), cross-checked against the direct quotient
/// for every n the budget allows, and scanned for an empirical period.
struct ResidueReport {
  unsigned long k;
  std::vector<unsigned long> residues;  // m_n for n = 0..n_max
  unsigned long expected_modulus;
  unsigned long expected_residue;
  std::size_t direct_checked;  // leading entries confirmed against m_numbers
  std::optional<PeriodCandidate> period;
};

ResidueReport m_residues(unsigned k, unsigned n_max, const Budgets& budgets = {});

/// Number of leading entries (n = 0, 1, ...) for which the direct quotient
/// M is computable within the given budgets; at most n_max + 1.
unsigned m_direct_budget_count(unsigned k, unsigned n_max, const Budgets& budgets);

}  // namespace tangenocchi::series
