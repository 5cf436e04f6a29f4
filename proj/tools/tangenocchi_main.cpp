// Command-line front end: sequence tables, pivot-class tables, verification
// suites and residue/period exploration, in table, CSV or JSON form.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "tangenocchi/budgets.hpp"
#include "tangenocchi/output.hpp"
#include "tangenocchi/series.hpp"
#include "tangenocchi/trees.hpp"
#include "tangenocchi/verify.hpp"

namespace {

namespace tc = tangenocchi;
using tc::cli::Cell;
using tc::cli::OutputRecord;

unsigned default_seq_n_max(const std::string& kind, unsigned k) {
  if (kind == "tangent" || kind == "genocchi") return 12;
  if (kind == "l" || kind == "m") {
    if (k == 2) return 8;
    if (k == 3) return 5;
    if (k == 4) return 4;
    return 3;
  }
  return 8;  // fuss-catalan, f
}

int run_seq(const std::string& kind, std::optional<unsigned> k_opt,
            std::optional<unsigned> n_opt, const std::string& format,
            const tc::Budgets& budgets) {
  unsigned k = k_opt.value_or(2);
  if ((kind == "tangent" || kind == "genocchi") && k != 2)
    throw std::invalid_argument("--kind " + kind + " is a k=2 sequence; --k " +
                                std::to_string(k) + " makes no sense");
  unsigned n_max = n_opt.value_or(default_seq_n_max(kind, k));

  tc::series::SeqRecord rec = [&] {
    if (kind == "tangent") return tc::series::tangent_numbers(n_max);
    if (kind == "genocchi") return tc::series::genocchi_numbers(n_max);
    if (kind == "l") return tc::series::l_numbers(k, n_max, budgets);
    if (kind == "m") return tc::series::m_numbers(k, n_max, budgets);
    if (kind == "fuss-catalan") return tc::series::fuss_catalan_numbers(k, n_max);
    if (kind == "f") return tc::series::weighted_f_numbers(k, n_max);
    throw std::invalid_argument("unknown sequence kind \"" + kind + "\"");
  }();

  OutputRecord out;
  out.command = "seq";
  out.parameters = {{"kind", kind},
                    {"k", std::to_string(k)},
                    {"n_max", std::to_string(n_max)}};
  out.columns = {"n", rec.column_label()};
  for (std::size_t n = 0; n < rec.values.size(); ++n)
    out.rows.push_back({Cell(tc::Nat(n)), Cell(rec.values[n])});
  std::cout << tc::cli::render(out, tc::cli::parse_format(format));
  return 0;
}

int run_classes(unsigned k, unsigned n, const std::string& format,
                const tc::Budgets& budgets) {
  auto classes = tc::trees::pivot_classes(k, n, budgets);

  OutputRecord out;
  out.command = "classes";
  out.parameters = {{"k", std::to_string(k)}, {"n", std::to_string(n)}};
  out.columns = {"shape", "class_size", "hook_product", "labelings", "total",
                 "quotient"};
  tc::Nat size_sum = 0, total_sum = 0, quotient_sum = 0;
  for (const auto& c : classes) {
    out.rows.push_back({Cell(c.canonical.to_string()), Cell(c.class_size),
                        Cell(c.hook_product), Cell(c.labelings), Cell(c.total),
                        Cell(c.quotient)});
    size_sum += c.class_size;
    total_sum += c.total;
    quotient_sum += c.quotient;
  }
  out.rows.push_back({Cell(std::string("sum")), Cell(size_sum),
                      Cell(std::string("")), Cell(std::string("")),
                      Cell(total_sum), Cell(quotient_sum)});
  std::cout << tc::cli::render(out, tc::cli::parse_format(format));
  return 0;
}

int run_verify_cmd(const std::string& scope, const std::string& k_range,
                   const std::string& n_range, const std::string& format,
                   const tc::Budgets& budgets) {
  std::optional<tc::cli::Range> kr, nr;
  if (!k_range.empty()) kr = tc::cli::parse_range(k_range);
  if (!n_range.empty()) nr = tc::cli::parse_range(n_range);
  auto rows = tc::cli::run_verify(tc::cli::parse_scope(scope), kr, nr, budgets);

  bool all_pass = true;
  OutputRecord out;
  out.command = "verify";
  out.parameters = {{"scope", scope},
                    {"k_range", k_range.empty() ? "default" : k_range},
                    {"n_range", n_range.empty() ? "default" : n_range}};
  out.columns = {"check", "params", "status", "detail"};
  for (const auto& row : rows) {
    all_pass = all_pass && row.pass;
    out.rows.push_back({Cell(row.check), Cell(row.params),
                        Cell(std::string(row.pass ? "pass" : "fail")),
                        Cell(row.detail)});
  }
  out.status = all_pass;
  std::cout << tc::cli::render(out, tc::cli::parse_format(format));
  return all_pass ? 0 : 1;
}

int run_residues(unsigned k, unsigned n_max, const std::string& format,
                 const tc::Budgets& budgets) {
  tc::series::ResidueReport report = tc::series::m_residues(k, n_max, budgets);

  OutputRecord out;
  out.command = "residues";
  out.parameters = {{"k", std::to_string(k)},
                    {"n_max", std::to_string(n_max)},
                    {"expected_modulus", std::to_string(report.expected_modulus)},
                    {"expected_residue", std::to_string(report.expected_residue)},
                    {"direct_checked", std::to_string(report.direct_checked)}};
  if (report.period.has_value()) {
    out.parameters.emplace_back("period_candidate",
                                std::to_string(report.period->period));
    out.parameters.emplace_back("repetitions",
                                std::to_string(report.period->repetitions));
  } else {
    out.parameters.emplace_back("period_candidate", "none");
  }
  out.parameters.emplace_back("period_basis", "empirical");

  out.columns = {"n", "m_n"};
  for (std::size_t n = 0; n < report.residues.size(); ++n)
    out.rows.push_back({Cell(tc::Nat(n)), Cell(tc::Nat(report.residues[n]))});
  std::cout << tc::cli::render(out, tc::cli::parse_format(format));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tangent/Genocchi sequences, k-ary tree pivot classes "
               "and divisibility verification"};
  app.require_subcommand(1);
  app.fallthrough();

  tc::Budgets budgets;
  app.add_option("--budget-enumeration", budgets.max_enumeration,
                 "max shapes a single enumeration may produce")
      ->envname("TANGENOCCHI_BUDGET_ENUMERATION");
  app.add_option("--budget-factorial", budgets.max_factorial_arg,
                 "largest allowed factorial argument")
      ->envname("TANGENOCCHI_BUDGET_FACTORIAL");
  app.add_option("--budget-recurrence-ops", budgets.max_recurrence_ops,
                 "work cap for the L recurrence (compositions x k)")
      ->envname("TANGENOCCHI_BUDGET_RECURRENCE_OPS");
  app.add_option("--budget-oracle-vertices", budgets.oracle_vertices,
                 "vertex cap for the brute-force labelling oracle "
                 "(0 = per-arity default 13/10/9)")
      ->envname("TANGENOCCHI_BUDGET_ORACLE_VERTICES");

  auto format_check = CLI::IsMember({"table", "csv", "json"});

  auto* seq = app.add_subcommand("seq", "print one of the integer sequences");
  std::string seq_kind;
  std::optional<unsigned> seq_k, seq_n_max;
  std::string seq_format = "table";
  seq->add_option("--kind", seq_kind, "tangent, genocchi, l, m, fuss-catalan or f")
      ->required()
      ->check(CLI::IsMember({"tangent", "genocchi", "l", "m", "fuss-catalan", "f"}));
  seq->add_option("--k", seq_k, "arity (default 2)");
  seq->add_option("--n-max", seq_n_max, "last index (kind-specific default)");
  seq->add_option("--format", seq_format)->check(format_check);

  auto* classes = app.add_subcommand("classes", "pivot-class table for (k, n)");
  unsigned classes_k = 2, classes_n = 0;
  std::string classes_format = "table";
  classes->add_option("--k", classes_k, "arity (default 2)");
  classes->add_option("--n", classes_n, "internal vertices")->required();
  classes->add_option("--format", classes_format)->check(format_check);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string verify_scope = "all", verify_k_range, verify_n_range;
  std::string verify_format = "table";
  verify->add_option("--scope", verify_scope,
                     "all, theorem1, theorem2, theorem3 or lemmas")
      ->check(CLI::IsMember({"all", "theorem1", "theorem2", "theorem3", "lemmas"}));
  verify->add_option("--k-range", verify_k_range, "e.g. 2..4");
  verify->add_option("--n-range", verify_n_range, "e.g. 0..8");
  verify->add_option("--format", verify_format)->check(format_check);

  auto* residues = app.add_subcommand("residues",
                                      "quotient residues mod k with period scan");
  unsigned residues_k = 0, residues_n_max = 12;
  std::string residues_format = "table";
  residues->add_option("--k", residues_k, "arity")->required();
  residues->add_option("--n-max", residues_n_max, "last index (default 12)");
  residues->add_option("--format", residues_format)->check(format_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*seq) return run_seq(seq_kind, seq_k, seq_n_max, seq_format, budgets);
    if (*classes) return run_classes(classes_k, classes_n, classes_format, budgets);
    if (*verify)
      return run_verify_cmd(verify_scope, verify_k_range, verify_n_range,
                            verify_format, budgets);
    if (*residues)
      return run_residues(residues_k, residues_n_max, residues_format, budgets);
    throw std::logic_error("no subcommand dispatched");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return tc::cli::exit_code_for(e);
  }
}
