#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "tangenocchi/exactnum.hpp"
#include "tangenocchi/series.hpp"

using namespace tangenocchi;
using namespace tangenocchi::series;

namespace {

// Test-side oracle: count permutations a_1 < a_2 > a_3 < a_4 ... of
// {1..len} by exhaustive scan. Independent of every series computation.
std::uint64_t alternating_permutations(unsigned len) {
  std::vector<unsigned> perm(len);
  std::iota(perm.begin(), perm.end(), 1u);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (unsigned i = 0; i + 1 < len && ok; ++i)
      ok = (i % 2 == 0) ? perm[i] < perm[i + 1] : perm[i] > perm[i + 1];
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

const std::vector<Nat> kTangentTable = {1,    2,      16,      272,
                                        7936, 353792, 22368256};
const std::vector<Nat> kGenocchiTable = {1, 1, 3, 17, 155, 2073, 38227};

}  // namespace

TEST_CASE("tangent numbers match the reference table") {
  SeqRecord t = tangent_numbers(6);
  REQUIRE(t.values.size() == 7);
  for (std::size_t i = 0; i < kTangentTable.size(); ++i)
    CHECK(t.values[i] == kTangentTable[i]);
  CHECK(t.column_label() == "T_{2n+1}");
  CHECK(t.index_label(3) == "T_7");
}

TEST_CASE("tangent numbers equal the alternating permutation count") {
  SeqRecord t = tangent_numbers(4);
  for (unsigned n = 0; n <= 4; ++n)
    CHECK(t.values[n] == alternating_permutations(2 * n + 1));
}

TEST_CASE("genocchi numbers match the reference table") {
  SeqRecord g = genocchi_numbers(6);
  REQUIRE(g.values.size() == 7);
  for (std::size_t i = 0; i < kGenocchiTable.size(); ++i)
    CHECK(g.values[i] == kGenocchiTable[i]);
  CHECK(g.column_label() == "G_{2n+2}");
  CHECK(g.index_label(4) == "G_10");
}

TEST_CASE("tangent divisibility") {
  SeqRecord t = tangent_numbers(12);
  for (unsigned n = 0; n <= 12; ++n) {
    CHECK(divides(pow_nat(2, n), t.values[n]));                     // 2^n | T
    CHECK(divides(pow_nat(2, 2 * n), Nat(n + 1) * t.values[n]));    // 2^2n | (n+1)T
  }
  SeqRecord g = genocchi_numbers(12);
  for (unsigned n = 0; n <= 12; ++n) CHECK(g.values[n] % 2 == 1);  // odd quotient
}

TEST_CASE("L recurrence reproduces tangent numbers at k=2") {
  SeqRecord l = l_numbers(2, 8);
  SeqRecord t = tangent_numbers(8);
  REQUIRE(l.values.size() == t.values.size());
  for (std::size_t i = 0; i < l.values.size(); ++i)
    CHECK(l.values[i] == t.values[i]);
  CHECK(l.column_label() == "L_{2n+1}");
}

TEST_CASE("L numbers for ternary and quaternary trees") {
  SeqRecord l3 = l_numbers(3, 5);
  CHECK(l3.values[0] == 1);
  CHECK(l3.values[1] == 6);
  CHECK(l3.values[2] == 540);
  CHECK(l3.values[3] == 184680);
  CHECK(l3.values[4] == 157600080);
  CHECK(l3.values[5] == Nat("270419925600"));

  SeqRecord l4 = l_numbers(4, 4);
  CHECK(l4.values[0] == 1);
  CHECK(l4.values[1] == 24);
  CHECK(l4.values[2] == 32256);
  CHECK(l4.values[3] == 285272064);
  CHECK(l4.values[4] == Nat("8967114326016"));
}

TEST_CASE("M quotients for ternary and quaternary trees") {
  SeqRecord m3 = m_numbers(3, 5);
  CHECK(m3.values[0] == 1);
  CHECK(m3.values[1] == 70);
  CHECK(m3.values[2] == 500500);
  CHECK(m3.values[3] == Nat("43001959000"));
  CHECK(m3.values[4] == Nat("21100495466050000"));
  CHECK(m3.values[5] == Nat("39781831724228093500000"));
  CHECK(m3.column_label() == "M_{6n+3}");
  CHECK(m3.index_label(2) == "M_15");

  SeqRecord m4 = m_numbers(4, 4);
  CHECK(m4.values[0] == 1);
  CHECK(m4.values[1] == 525525);
  CHECK(m4.values[2] == Nat("10258577044340625"));
  CHECK(m4.values[3] == Nat("42645955937142729593062265625"));
  CHECK(m4.values[4] == Nat("6992644904557760596067178252404694486328125"));
  CHECK(m4.column_label() == "M_{12n+4}");
}

TEST_CASE("M at k=2 is the Genocchi sequence") {
  SeqRecord m = m_numbers(2, 6);
  for (std::size_t i = 0; i < kGenocchiTable.size(); ++i)
    CHECK(m.values[i] == kGenocchiTable[i]);
}

TEST_CASE("M quotients satisfy the expected congruence for k <= 12") {
  for (unsigned k = 2; k <= 12; ++k) {
    auto cong = exactnum::expected_congruence(k);
    unsigned n_max = std::min(4u, m_direct_budget_count(k, 4, Budgets{}) - 1);
    SeqRecord m = m_numbers(k, n_max);
    for (unsigned n = 1; n <= n_max; ++n)
      CHECK(mpz_fdiv_ui(m.values[n].get_mpz_t(), cong.modulus) == cong.residue);
  }
}

TEST_CASE("phi solves its differential equation with the right support") {
  // Construction already cross-checks the ODE route against the recurrence;
  // these are spot checks of the published support values.
  SeriesCoeffs phi2 = phi_coefficients(2, 17);
  CHECK(phi2.egf[1] == 1);
  CHECK(phi2.egf[3] == 2);
  CHECK(phi2.egf[5] == 16);
  CHECK(phi2.egf[7] == 272);
  CHECK(phi2.egf[2] == 0);
  CHECK(phi2.egf[10] == 0);

  SeriesCoeffs phi3 = phi_coefficients(3, 13);
  CHECK(phi3.egf[1] == 1);
  CHECK(phi3.egf[4] == 6);
  CHECK(phi3.egf[7] == 540);
  CHECK(phi3.egf[10] == 184680);

  SeriesCoeffs phi5 = phi_coefficients(5, 11);
  CHECK(phi5.egf[1] == 1);
  CHECK(phi5.egf[6] == 120);  // 5 leaves under the root: 5! orderings
}

TEST_CASE("psi expands x tan(x/2) at k=2") {
  SeriesCoeffs psi = psi_coefficients(2, 10);
  CHECK(psi.egf[0] == 0);
  CHECK(psi.egf[2] == 1);
  CHECK(psi.egf[4] == 1);
  CHECK(psi.egf[6] == 3);
  CHECK(psi.egf[8] == 17);
  CHECK(psi.egf[10] == 155);
  for (unsigned e : {1u, 3u, 5u, 7u, 9u}) CHECK(psi.egf[e] == 0);
}

TEST_CASE("psi support matches M for k=3 and survives the ODE check") {
  SeriesCoeffs psi = psi_coefficients(3, 25);
  CHECK(psi.egf[3] == 1);
  CHECK(psi.egf[9] == 70);
  CHECK(psi.egf[15] == 500500);
  CHECK(psi.egf[21] == Nat("43001959000"));
  for (unsigned e = 0; e <= 25; ++e)
    if (e < 3 || (e - 3) % 6 != 0) CHECK(psi.egf[e] == 0);
}

TEST_CASE("fuss-catalan numbers") {
  CHECK(fuss_catalan(2, 0) == 1);
  CHECK(fuss_catalan(2, 1) == 1);
  CHECK(fuss_catalan(2, 2) == 2);
  CHECK(fuss_catalan(2, 3) == 5);
  CHECK(fuss_catalan(3, 2) == 3);
  CHECK(fuss_catalan(7, 0) == 1);
  CHECK(fuss_catalan(3, 3) == 12);
}

TEST_CASE("weighted sums through both closed forms") {
  CHECK(f_closed_form(2, 1) == 3);      // 1!! * 3!!
  CHECK(f_closed_form(2, 4) == 99225);  // (3*5*7)^2 * 9
  CHECK(f_closed_form(3, 1) == 280);    // 1 * 10 * 28 * 1

  // k=2: equal to the odd double-factorial product, hence odd.
  for (unsigned n = 0; n <= 50; ++n) CHECK(f_closed_form(2, n) % 2 == 1);

  // Successive values divide each other (the first product only grows).
  for (unsigned k = 2; k <= 6; ++k)
    for (unsigned n = 0; n <= 6; ++n)
      CHECK(divides(f_closed_form(k, n), f_closed_form(k, n + 1)));
}

TEST_CASE("period detection") {
  std::vector<unsigned long> paper8 = {1, 1, 5, 5, 1, 1, 5, 5};
  auto p = detect_period(paper8);
  REQUIRE(p.has_value());
  CHECK(p->period == 4);
  CHECK(p->repetitions == 2);

  std::vector<unsigned long> constant = {7, 7, 7, 7};
  p = detect_period(constant);
  REQUIRE(p.has_value());
  CHECK(p->period == 1);
  CHECK(p->repetitions == 4);

  std::vector<unsigned long> none = {1, 2, 3};
  CHECK_FALSE(detect_period(none).has_value());

  std::vector<unsigned long> empty;
  CHECK_FALSE(detect_period(empty).has_value());

  // One full period plus a partial second is not enough evidence.
  std::vector<unsigned long> partial = {1, 2, 3, 1, 2};
  CHECK_FALSE(detect_period(partial).has_value());
}

TEST_CASE("residues for k=8 reproduce the published prefix") {
  ResidueReport r = m_residues(8, 7);
  std::vector<unsigned long> want = {1, 1, 5, 5, 1, 1, 5, 5};
  CHECK(r.residues == want);
  CHECK(r.expected_modulus == 4);
  CHECK(r.expected_residue == 1);
  CHECK(r.direct_checked == 8);  // small enough to confirm every entry
  REQUIRE(r.period.has_value());
  CHECK(r.period->period == 4);
  CHECK(r.period->repetitions == 2);
}

TEST_CASE("residues for k=27 reproduce the published prefix") {
  ResidueReport r = m_residues(27, 8);
  std::vector<unsigned long> want = {1, 1, 10, 1, 1, 10, 1, 1, 10};
  CHECK(r.residues == want);
  CHECK(r.direct_checked == 6);  // budget stops the direct quotient at n=5
  REQUIRE(r.period.has_value());
  CHECK(r.period->period == 3);
  CHECK(r.period->repetitions == 3);
}

TEST_CASE("residues for a k with two prime factors vanish from n=1 on") {
  ResidueReport r = m_residues(6, 4);
  std::vector<unsigned long> want = {1, 0, 0, 0, 0};
  CHECK(r.residues == want);
  CHECK(r.expected_modulus == 6);
  CHECK(r.expected_residue == 0);
  // The leading 1 (the quotient at n=0 is always 1) keeps this sequence
  // from being purely periodic, so no candidate is reported.
  CHECK_FALSE(r.period.has_value());
}

TEST_CASE("budget guardrails") {
  CHECK_THROWS_AS(l_numbers(16, 8), BudgetError);
  CHECK_NOTHROW(l_numbers(16, 7));
  CHECK_THROWS_AS(m_numbers(3000, 1), BudgetError);  // factorial cap

  Budgets tight;
  tight.max_recurrence_ops = 10;
  CHECK_THROWS_AS(l_numbers(3, 4, tight), BudgetError);

  CHECK(m_direct_budget_count(625, 9, Budgets{}) == 3);
  CHECK(m_direct_budget_count(2, 9, Budgets{}) == 10);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(l_numbers(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(fuss_catalan(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(m_residues(1, 3), std::invalid_argument);
}
