#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tangenocchi/budgets.hpp"

namespace tangenocchi::cli {

enum class VerifyScope { All, Theorem1, Theorem2, Theorem3, Lemmas };

/// Accepts "all", "theorem1", "theorem2", "theorem3" or "lemmas".
VerifyScope parse_scope(std::string_view name);

/// Inclusive range, parsed from "lo..hi" or a single value.
struct Range {
  unsigned lo;
  unsigned hi;
};

Range parse_range(std::string_view text);

struct CheckRow {
  std::string check;
  std::string params;
  bool pass;
  std::string detail;
};

/// Runs every check in scope and reports one row each. A failed identity
/// shows up as a failing row (never an exception); genuine resource
/// overruns still raise BudgetError.
///
/// Scope contents:
///   theorem1 - (n+1)T_{2n+1} divisible by 2^(2n) with odd quotient,
///              n over n_range (default 0..10).
///   theorem2 - per-class divisibility with quotient sums, the integrality
///              and congruence of the M sequence, and the phi/psi
///              generating-function identities; k over k_range
///              (default 2..4), n over n_range (per-k defaults).
///   theorem3 - weighted class sums against (2n-1)!!(2n+1)!!,
///              n over n_range (default 0..8).
///   lemmas   - Legendre dual forms, the (pk+1)...(pk+p-1) congruence
///              mod p^2, and the binomial-product coefficient identity.
std::vector<CheckRow> run_verify(VerifyScope scope, std::optional<Range> k_range,
                                 std::optional<Range> n_range,
                                 const Budgets& budgets);

}  // namespace tangenocchi::cli
