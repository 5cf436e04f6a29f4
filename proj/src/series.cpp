#include "tangenocchi/series.hpp"

#include <algorithm>

#include "compositions.hpp"
#include "tangenocchi/exactnum.hpp"

namespace tangenocchi::series {

namespace ex = tangenocchi::exactnum;
using internal::next_composition;

namespace {

void require_k(unsigned k) {
  if (k < 2) throw std::invalid_argument("k must be >= 2, got " + std::to_string(k));
  if (k > 1'000'000)
    throw std::invalid_argument("k = " + std::to_string(k) +
                                " is far beyond desk scale");
}

// Factorial argument of M at index n: (k^2-k)n + k.
std::uint64_t m_factorial_arg(unsigned k, unsigned n) {
  return (std::uint64_t(k) * k - k) * n + k;
}

// Coefficient-wise product of exponential generating functions:
// (fg)_m = sum_i C(m, i) f_i g_{m-i}.
std::vector<Nat> egf_mul(const std::vector<Nat>& f, const std::vector<Nat>& g,
                         unsigned order) {
  std::vector<Nat> out(order + 1, Nat(0));
  for (unsigned m = 0; m <= order; ++m) {
    Nat acc = 0;
    for (unsigned i = 0; i <= m; ++i) {
      if (i >= f.size() || m - i >= g.size()) continue;
      if (f[i] == 0 || g[m - i] == 0) continue;
      acc += ex::binomial(m, i) * f[i] * g[m - i];
    }
    out[m] = acc;
  }
  return out;
}

std::vector<Nat> egf_pow(const std::vector<Nat>& f, unsigned long e, unsigned order) {
  std::vector<Nat> result(order + 1, Nat(0));
  result[0] = 1;
  std::vector<Nat> base = f;
  base.resize(order + 1, Nat(0));
  while (e > 0) {
    if (e & 1) result = egf_mul(result, base, order);
    e >>= 1;
    if (e > 0) base = egf_mul(base, base, order);
  }
  return result;
}

// Ordinary (non-EGF) truncated product for rational series.
std::vector<mpq_class> poly_mul(const std::vector<mpq_class>& f,
                                const std::vector<mpq_class>& g, unsigned order) {
  std::vector<mpq_class> out(order + 1, mpq_class(0));
  for (unsigned i = 0; i <= order && i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (unsigned j = 0; i + j <= order && j < g.size(); ++j) {
      if (g[j] == 0) continue;
      out[i + j] += f[i] * g[j];
    }
  }
  return out;
}

std::vector<mpq_class> poly_pow(const std::vector<mpq_class>& f, unsigned long e,
                                unsigned order) {
  std::vector<mpq_class> result(order + 1, mpq_class(0));
  result[0] = 1;
  std::vector<mpq_class> base = f;
  base.resize(order + 1, mpq_class(0));
  while (e > 0) {
    if (e & 1) result = poly_mul(result, base, order);
    e >>= 1;
    if (e > 0) base = poly_mul(base, base, order);
  }
  return result;
}

}  // namespace

std::string SeqRecord::column_label() const {
  switch (kind) {
    case SeqKind::Tangent:
      return "T_{2n+1}";
    case SeqKind::Genocchi:
      return "G_{2n+2}";
    case SeqKind::L:
      return "L_{" + std::to_string(k) + "n+1}";
    case SeqKind::M:
      return "M_{" + std::to_string(std::uint64_t(k) * k - k) + "n+" +
             std::to_string(k) + "}";
    case SeqKind::FussCatalan:
      return "C_" + std::to_string(k) + "(n)";
    case SeqKind::WeightedF:
      return "f(n)";
  }
  throw std::logic_error("SeqRecord: unreachable kind");
}

std::string SeqRecord::index_label(std::size_t i) const {
  switch (kind) {
    case SeqKind::Tangent:
      return "T_" + std::to_string(2 * i + 1);
    case SeqKind::Genocchi:
      return "G_" + std::to_string(2 * i + 2);
    case SeqKind::L:
      return "L_" + std::to_string(std::uint64_t(k) * i + 1);
    case SeqKind::M:
      return "M_" + std::to_string((std::uint64_t(k) * k - k) * i + k);
    case SeqKind::FussCatalan:
      return "C_" + std::to_string(k) + "(" + std::to_string(i) + ")";
    case SeqKind::WeightedF:
      return "f(" + std::to_string(i) + ")";
  }
  throw std::logic_error("SeqRecord: unreachable kind");
}

SeqRecord l_numbers(unsigned k, unsigned n_max, const Budgets& budgets) {
  require_k(k);
  std::vector<Nat> values;
  values.emplace_back(1);  // L_1: the single-leaf tree has one labelling

  Nat ops = 0;
  std::vector<unsigned long> parts(k);
  for (unsigned n = 1; n <= n_max; ++n) {
    ops += ex::binomial(n - 1 + k - 1, k - 1) * k;
    if (ops > budgets.max_recurrence_ops)
      throw BudgetError("l_numbers: recurrence work for k=" + std::to_string(k) +
                        " n=" + std::to_string(n) + " exceeds max_recurrence_ops=" +
                        std::to_string(budgets.max_recurrence_ops));

    std::vector<unsigned long> comp(k, 0);
    comp.back() = n - 1;
    Nat sum = 0;
    while (true) {
      for (unsigned i = 0; i < k; ++i) parts[i] = k * comp[i] + 1;
      Nat term = ex::multinomial(std::uint64_t(k) * n, parts);
      for (unsigned i = 0; i < k; ++i) term *= values[comp[i]];
      sum += term;
      if (!next_composition(comp)) break;
    }
    values.push_back(std::move(sum));
  }
  return {SeqKind::L, k, std::move(values)};
}

SeqRecord m_numbers(unsigned k, unsigned n_max, const Budgets& budgets) {
  require_k(k);
  SeqRecord l = l_numbers(k, n_max, budgets);
  const Nat kfact = ex::factorial(k);

  std::vector<Nat> values;
  for (unsigned n = 0; n <= n_max; ++n) {
    std::uint64_t arg = m_factorial_arg(k, n);
    if (arg > budgets.max_factorial_arg)
      throw BudgetError("m_numbers: factorial argument " + std::to_string(arg) +
                        " exceeds max_factorial_arg=" +
                        std::to_string(budgets.max_factorial_arg));
    Nat numerator = ex::factorial(arg) * l.values[n];
    Nat denominator =
        pow_nat(kfact, std::uint64_t(k) * n + 1) * ex::factorial(std::uint64_t(k) * n + 1);
    if (!divides(denominator, numerator))
      throw VerificationError(
          "m_numbers: quotient not integral at k=" + std::to_string(k) +
          " n=" + std::to_string(n) + "; this contradicts the k-ary divisibility");
    values.push_back(div_exact(numerator, denominator));
  }
  return {SeqKind::M, k, std::move(values)};
}

SeqRecord tangent_numbers(unsigned n_max) {
  SeriesCoeffs phi = phi_coefficients(2, 2 * n_max + 1);
  std::vector<Nat> values;
  for (unsigned n = 0; n <= n_max; ++n) values.push_back(phi.egf[2 * n + 1]);
  return {SeqKind::Tangent, 2, std::move(values)};
}

SeqRecord genocchi_numbers(unsigned n_max) {
  SeqRecord t = tangent_numbers(n_max);
  std::vector<Nat> values;
  for (unsigned n = 0; n <= n_max; ++n) {
    Nat numerator = Nat(n + 1) * t.values[n];
    Nat power = pow_nat(Nat(2), 2 * std::uint64_t(n));
    if (!divides(power, numerator))
      throw VerificationError("genocchi_numbers: (n+1)T_{2n+1} not divisible by "
                              "2^(2n) at n=" + std::to_string(n));
    values.push_back(div_exact(numerator, power));
  }
  return {SeqKind::Genocchi, 2, std::move(values)};
}

Nat fuss_catalan(unsigned k, unsigned n) {
  require_k(k);
  std::uint64_t kn = std::uint64_t(k) * n;
  return div_exact(ex::factorial(kn),
                   ex::factorial(n) * ex::factorial(kn - n + 1));
}

SeqRecord fuss_catalan_numbers(unsigned k, unsigned n_max) {
  std::vector<Nat> values;
  for (unsigned n = 0; n <= n_max; ++n) values.push_back(fuss_catalan(k, n));
  return {SeqKind::FussCatalan, k, std::move(values)};
}

Nat f_closed_form(unsigned k, unsigned n) {
  require_k(k);
  const Nat kfact = ex::factorial(k);
  const std::uint64_t blocks = std::uint64_t(k) * n - n + 1;  // kn-n+1

  // Factorial form: two set-partition counts (blocks of size k), so each
  // division is exact.
  Nat part1 = div_exact(ex::factorial(m_factorial_arg(k, n)),
                        pow_nat(kfact, blocks) * ex::factorial(blocks));
  Nat part2 = div_exact(ex::factorial(std::uint64_t(k) * n),
                        pow_nat(kfact, n) * ex::factorial(n));
  Nat factorial_form = part1 * part2;

  Nat product_form = 1;
  for (std::uint64_t i = 0; i <= std::uint64_t(k) * n - n; ++i)
    product_form *= ex::binomial(i * k + k - 1, k - 1);
  for (std::uint64_t j = 0; j + 1 <= n; ++j)
    product_form *= ex::binomial(j * k + k - 1, k - 1);

  if (factorial_form != product_form)
    throw VerificationError("f_closed_form: factorial and binomial-product "
                            "forms disagree at k=" + std::to_string(k) +
                            " n=" + std::to_string(n));
  if (k == 2) {
    Nat odd = ex::double_factorial(2 * long(n) - 1) *
              ex::double_factorial(2 * long(n) + 1);
    if (factorial_form != odd)
      throw VerificationError(
          "f_closed_form: k=2 value differs from (2n-1)!!(2n+1)!! at n=" +
          std::to_string(n));
  }
  return factorial_form;
}

SeqRecord weighted_f_numbers(unsigned k, unsigned n_max) {
  std::vector<Nat> values;
  for (unsigned n = 0; n <= n_max; ++n) values.push_back(f_closed_form(k, n));
  return {SeqKind::WeightedF, k, std::move(values)};
}

SeriesCoeffs phi_coefficients(unsigned k, unsigned order, const Budgets& budgets) {
  require_k(k);
  std::vector<Nat> a(order + 1, Nat(0));
  if (order >= 1) a[1] = 1;
  for (unsigned m = 1; m + 1 <= order; ++m) {
    // phi has no constant term, so (phi^k)_m only involves coefficients
    // a_1..a_{m-k+1}, all already known.
    std::vector<Nat> p = egf_pow(a, k, m);
    a[m + 1] = p[m];
  }

  // Independent route: the multinomial recurrence must produce the same
  // support entries, and everything off support must vanish.
  unsigned n_support = order >= 1 ? (order - 1) / k : 0;
  SeqRecord l = l_numbers(k, n_support, budgets);
  for (unsigned m = 0; m <= order; ++m) {
    if (m % k == 1) {
      unsigned n = (m - 1) / k;
      if (a[m] != l.values[n])
        throw VerificationError(
            "phi_coefficients: ODE extraction disagrees with the recurrence "
            "at exponent " + std::to_string(m) + " (k=" + std::to_string(k) + ")");
    } else if (a[m] != 0) {
      throw VerificationError("phi_coefficients: nonzero off-support entry at "
                              "exponent " + std::to_string(m));
    }
  }
  return {SeriesCoeffs::Kind::Phi, k, order, std::move(a)};
}

SeriesCoeffs psi_coefficients(unsigned k, unsigned order, const Budgets& budgets) {
  require_k(k);
  const Nat kfact = ex::factorial(k);

  // Substitute y = x^(k-1)/k! into phi, then multiply by x: the phi term of
  // degree j lands on exponent j(k-1)+1 with an extra (k!)^j denominator.
  unsigned j_max = order >= 1 ? (order - 1) / (k - 1) : 0;
  SeriesCoeffs phi = phi_coefficients(k, j_max, budgets);

  std::vector<mpq_class> d(order + 1, mpq_class(0));  // ordinary coefficients
  for (unsigned j = 1; j <= j_max; ++j) {
    if (phi.egf[j] == 0) continue;
    std::uint64_t exponent = std::uint64_t(j) * (k - 1) + 1;
    if (exponent > order) continue;
    d[exponent] = mpq_class(phi.egf[j]) /
                  mpq_class(ex::factorial(j) * pow_nat(kfact, j));
  }

  // Support exponents are (k^2-k)n+k; integer EGF entries must match the
  // quotient sequence, and every other exponent must carry zero.
  const std::uint64_t stride = std::uint64_t(k) * k - k;
  unsigned n_support = order >= k ? unsigned((order - k) / stride) : 0;
  std::optional<SeqRecord> m;
  if (order >= k) m = m_numbers(k, n_support, budgets);

  std::vector<Nat> egf(order + 1, Nat(0));
  for (unsigned e = 0; e <= order; ++e) {
    mpq_class coeff = d[e] * ex::factorial(e);
    bool on_support = e >= k && (e - k) % stride == 0;
    if (on_support) {
      if (coeff.get_den() != 1)
        throw VerificationError("psi_coefficients: non-integer support "
                                "coefficient at exponent " + std::to_string(e));
      unsigned n = unsigned((e - k) / stride);
      if (coeff.get_num() != m->values[n])
        throw VerificationError("psi_coefficients: support coefficient differs "
                                "from the quotient sequence at exponent " +
                                std::to_string(e));
      egf[e] = coeff.get_num();
    } else if (coeff != 0) {
      throw VerificationError("psi_coefficients: nonzero off-support entry at "
                              "exponent " + std::to_string(e));
    }
  }

  // ODE restatement: x psi' - psi = ((k-1)/k!) (x^k + psi^k),
  // checked on ordinary coefficients through the requested order.
  std::vector<mpq_class> psi_k = poly_pow(d, k, order);
  const mpq_class scale = mpq_class(k - 1) / mpq_class(kfact);
  for (unsigned e = 0; e <= order; ++e) {
    mpq_class lhs = d[e] * (long(e) - 1);
    mpq_class rhs = scale * ((e == k ? mpq_class(1) : mpq_class(0)) + psi_k[e]);
    if (lhs != rhs)
      throw VerificationError("psi_coefficients: differential identity fails "
                              "at exponent " + std::to_string(e) +
                              " (k=" + std::to_string(k) + ")");
  }

  return {SeriesCoeffs::Kind::Psi, k, order, std::move(egf)};
}

std::optional<PeriodCandidate> detect_period(std::span<const unsigned long> seq) {
  const std::size_t len = seq.size();
  for (std::size_t p = 1; 2 * p <= len; ++p) {
    bool ok = true;
    for (std::size_t i = 0; i + p < len; ++i)
      if (seq[i] != seq[i + p]) {
        ok = false;
        break;
      }
    if (ok) return PeriodCandidate{p, len / p};
  }
  return std::nullopt;
}

unsigned m_direct_budget_count(unsigned k, unsigned n_max, const Budgets& budgets) {
  require_k(k);
  unsigned count = 0;
  Nat ops = 0;
  for (unsigned n = 0; n <= n_max; ++n) {
    if (n >= 1) ops += ex::binomial(n - 1 + k - 1, k - 1) * k;
    if (ops > budgets.max_recurrence_ops) break;
    if (m_factorial_arg(k, n) > budgets.max_factorial_arg) break;
    ++count;
  }
  return count;
}

ResidueReport m_residues(unsigned k, unsigned n_max, const Budgets& budgets) {
  require_k(k);
  ex::Congruence expected = ex::expected_congruence(k);

  // Cheap path: f(n) mod k via the binomial product, extended incrementally.
  // f(n) = M (mod k) because every hook product is 1 mod k.
  std::vector<unsigned long> residues;
  unsigned long running = 1 % k;  // f(0): the lone factor C(k-1, k-1)
  residues.push_back(running);
  for (unsigned n = 1; n <= n_max; ++n) {
    std::uint64_t lo = std::uint64_t(k) * (n - 1) - (n - 1) + 1;
    std::uint64_t hi = std::uint64_t(k) * n - n;
    for (std::uint64_t i = lo; i <= hi; ++i) {
      unsigned long b = mpz_fdiv_ui(ex::binomial(i * k + k - 1, k - 1).get_mpz_t(), k);
      running = (running * b) % k;
    }
    unsigned long b =
        mpz_fdiv_ui(ex::binomial(std::uint64_t(k) * (n - 1) + k - 1, k - 1).get_mpz_t(), k);
    running = (running * b) % k;
    residues.push_back(running);

    // The congruence holds for n >= 1 (at n = 0 the quotient is always 1).
    if (residues[n] % expected.modulus != expected.residue)
      throw VerificationError("m_residues: residue " + std::to_string(residues[n]) +
                              " at n=" + std::to_string(n) + " violates the "
                              "expected congruence for k=" + std::to_string(k));
  }

  // Cross-check against the direct quotient wherever the budget allows.
  unsigned direct = m_direct_budget_count(k, n_max, budgets);
  if (direct > 0) {
    SeqRecord m = m_numbers(k, direct - 1, budgets);
    for (unsigned n = 0; n < direct; ++n) {
      unsigned long r = mpz_fdiv_ui(m.values[n].get_mpz_t(), k);
      if (r != residues[n])
        throw VerificationError("m_residues: cheap path " +
                                std::to_string(residues[n]) + " and direct "
                                "quotient " + std::to_string(r) +
                                " disagree at k=" + std::to_string(k) +
                                " n=" + std::to_string(n));
    }
  }

  return {k, residues, expected.modulus, expected.residue, direct,
          detect_period(residues)};
}

}  // namespace tangenocchi::series
