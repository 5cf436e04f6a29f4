#include "tangenocchi/verify.hpp"

#include <algorithm>

#include "tangenocchi/exactnum.hpp"
#include "tangenocchi/series.hpp"
#include "tangenocchi/trees.hpp"

namespace tangenocchi::cli {

namespace ex = tangenocchi::exactnum;

namespace {

std::string kn_params(unsigned k, unsigned n) {
  return "k=" + std::to_string(k) + " n=" + std::to_string(n);
}

// Wraps one check so a failed identity becomes a failing row.
template <typename Fn>
CheckRow checked(std::string name, std::string params, Fn&& fn) {
  try {
    std::string detail = fn();
    return {std::move(name), std::move(params), true, std::move(detail)};
  } catch (const VerificationError& e) {
    return {std::move(name), std::move(params), false, e.what()};
  }
}

unsigned default_theorem2_n(unsigned k, const Budgets& budgets) {
  if (k == 2) return 7;
  if (k == 3) return 4;
  if (k == 4) return 3;
  unsigned count = series::m_direct_budget_count(k, 3, budgets);
  return count == 0 ? 0 : count - 1;
}

void run_theorem1(std::vector<CheckRow>& rows, Range n_range) {
  series::SeqRecord t = series::tangent_numbers(n_range.hi);
  for (unsigned n = n_range.lo; n <= n_range.hi; ++n) {
    rows.push_back(checked("theorem1.divisibility", "n=" + std::to_string(n), [&] {
      Nat numerator = Nat(n + 1) * t.values[n];
      Nat power = pow_nat(2, 2 * std::uint64_t(n));
      if (!divides(power, numerator))
        throw VerificationError("(n+1)T_{2n+1} not divisible by 2^(2n)");
      Nat g = div_exact(numerator, power);
      if (g % 2 != 1) throw VerificationError("quotient " + to_decimal(g) + " is even");
      return "G_" + std::to_string(2 * n + 2) + " = " + to_decimal(g);
    }));
  }
}

void run_theorem2(std::vector<CheckRow>& rows, Range k_range,
                  std::optional<Range> n_range, const Budgets& budgets) {
  for (unsigned k = k_range.lo; k <= k_range.hi; ++k) {
    Range nr = n_range.value_or(Range{0, default_theorem2_n(k, budgets)});
    series::SeqRecord m = series::m_numbers(k, nr.hi, budgets);

    for (unsigned n = nr.lo; n <= nr.hi; ++n) {
      rows.push_back(checked("theorem2a.quotient-integral", kn_params(k, n), [&] {
        // m_numbers already proved integrality while building the record.
        return m.index_label(n) + " = " + to_decimal(m.values[n]);
      }));

      rows.push_back(checked("theorem2a.class-divisibility", kn_params(k, n), [&] {
        auto report = trees::verify_class_divisibility(k, n, budgets);
        if (!report.pass)
          throw VerificationError("a class misses the (k!)^(kn+1) divisibility");
        if (report.quotient_sum != m.values[n])
          throw VerificationError("class quotient sum " +
                                  to_decimal(report.quotient_sum) +
                                  " != " + to_decimal(m.values[n]));
        return "classes: " + std::to_string(report.classes.size()) +
               ", quotient sum " + to_decimal(report.quotient_sum);
      }));

      if (n >= 1) {
        rows.push_back(checked("theorem2b.congruence", kn_params(k, n), [&] {
          ex::Congruence cong = ex::expected_congruence(k);
          unsigned long r = mpz_fdiv_ui(m.values[n].get_mpz_t(), cong.modulus);
          if (r != cong.residue)
            throw VerificationError("M = " + std::to_string(r) + " (mod " +
                                    std::to_string(cong.modulus) + "), expected " +
                                    std::to_string(cong.residue));
          return "M = " + std::to_string(cong.residue) + " (mod " +
                 std::to_string(cong.modulus) + ")";
        }));
      }
    }

    rows.push_back(checked("theorem2.phi-ode", "k=" + std::to_string(k), [&] {
      unsigned order = k * nr.hi + 1;
      series::phi_coefficients(k, order, budgets);
      return "support equals the recurrence through order " + std::to_string(order);
    }));

    rows.push_back(checked("theorem2.psi-substitution", "k=" + std::to_string(k), [&] {
      unsigned order = k == 2 ? 30 : (k == 3 ? 25 : (k * k - k) * 2 + k);
      series::psi_coefficients(k, order, budgets);
      return "support and differential identity hold through order " +
             std::to_string(order);
    }));
  }
}

void run_theorem3(std::vector<CheckRow>& rows, Range n_range,
                  const Budgets& budgets) {
  for (unsigned n = n_range.lo; n <= n_range.hi; ++n) {
    rows.push_back(checked("theorem3.weighted-sum", "n=" + std::to_string(n), [&] {
      Nat sum = trees::class_weighted_sum(2, n, budgets);
      Nat odd = ex::double_factorial(2 * long(n) - 1) *
                ex::double_factorial(2 * long(n) + 1);
      if (sum != odd)
        throw VerificationError("class sum " + to_decimal(sum) +
                                " != (2n-1)!!(2n+1)!! = " + to_decimal(odd));
      return "f(" + std::to_string(n) + ") = " + to_decimal(sum);
    }));
  }
}

void run_lemmas(std::vector<CheckRow>& rows, std::optional<Range> k_range,
                std::optional<Range> n_range) {
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul}) {
    rows.push_back(checked("lemmas.legendre-dual-form", "p=" + std::to_string(p), [&] {
      for (unsigned long n = 0; n <= 10'000; ++n) ex::legendre_valuation(n, p);
      return "both forms agree for n <= 10000";
    }));
  }

  unsigned long lemma6_max = k_range ? k_range->hi : 50;
  for (unsigned long p : {3ul, 5ul, 7ul}) {
    rows.push_back(checked("lemmas.product-congruence", "p=" + std::to_string(p), [&] {
      auto report = ex::verify_lemma_p2(p, lemma6_max);
      if (!report.pass)
        throw VerificationError("fails first at k=" +
                                std::to_string(*report.first_failure));
      return "holds for k <= " + std::to_string(lemma6_max);
    }));
  }

  Range kr = k_range.value_or(Range{2, 6});
  Range nr = n_range.value_or(Range{1, 5});
  for (unsigned k = std::max(2u, kr.lo); k <= kr.hi; ++k)
    for (unsigned n = std::max(1u, nr.lo); n <= nr.hi; ++n) {
      rows.push_back(checked("lemmas.coefficient-identity", kn_params(k, n), [&] {
        auto report = ex::verify_coeff_identity(k, n);
        if (!report.integral)
          throw VerificationError("left-hand side is not an integer");
        if (!report.pass)
          throw VerificationError("forms disagree: " +
                                  to_decimal(report.factorial_form) + " vs " +
                                  to_decimal(report.product_form));
        return "both sides equal " + to_decimal(report.factorial_form);
      }));
    }
}

}  // namespace

VerifyScope parse_scope(std::string_view name) {
  if (name == "all") return VerifyScope::All;
  if (name == "theorem1") return VerifyScope::Theorem1;
  if (name == "theorem2") return VerifyScope::Theorem2;
  if (name == "theorem3") return VerifyScope::Theorem3;
  if (name == "lemmas") return VerifyScope::Lemmas;
  throw std::invalid_argument("unknown scope \"" + std::string(name) +
                              "\" (expected all, theorem1, theorem2, theorem3 "
                              "or lemmas)");
}

Range parse_range(std::string_view text) {
  auto parse_bound = [](std::string_view part) -> unsigned {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string_view::npos)
      throw std::invalid_argument("bad range bound \"" + std::string(part) + "\"");
    return unsigned(std::stoul(std::string(part)));
  };
  std::size_t dots = text.find("..");
  if (dots == std::string_view::npos) {
    unsigned v = parse_bound(text);
    return {v, v};
  }
  Range r{parse_bound(text.substr(0, dots)), parse_bound(text.substr(dots + 2))};
  if (r.lo > r.hi)
    throw std::invalid_argument("empty range \"" + std::string(text) + "\"");
  return r;
}

std::vector<CheckRow> run_verify(VerifyScope scope, std::optional<Range> k_range,
                                 std::optional<Range> n_range,
                                 const Budgets& budgets) {
  std::vector<CheckRow> rows;
  if (scope == VerifyScope::All || scope == VerifyScope::Theorem1)
    run_theorem1(rows, n_range.value_or(Range{0, 10}));
  if (scope == VerifyScope::All || scope == VerifyScope::Theorem2)
    run_theorem2(rows, k_range.value_or(Range{2, 4}), n_range, budgets);
  if (scope == VerifyScope::All || scope == VerifyScope::Theorem3)
    run_theorem3(rows, n_range.value_or(Range{0, 8}), budgets);
  if (scope == VerifyScope::All || scope == VerifyScope::Lemmas)
    run_lemmas(rows, k_range, n_range);
  return rows;
}

}  // namespace tangenocchi::cli
