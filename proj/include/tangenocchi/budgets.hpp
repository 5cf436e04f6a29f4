#pragma once

#include <cstdint>

namespace tangenocchi {

/// Resource guardrails. Exact big-integer combinatorics blows up fast
/// (Fuss-Catalan shape counts, composition sums, factorials of k^2*n), so
/// every potentially explosive entry point takes a Budgets and fails with a
/// BudgetError instead of silently grinding.
///
/// The CLI exposes these as --budget-* flags, each mirrored by a
/// TANGENOCCHI_BUDGET_* environment variable (flags win).
struct Budgets {
  /// Max number of tree shapes a single enumeration may produce.
  std::uint64_t max_enumeration = 250'000;

  /// Largest n for which n! may be formed.
  std::uint64_t max_factorial_arg = 5'000'000;

  /// Cumulative work bound for the L recurrence: sum over steps of
  /// (compositions visited) * k. Each unit is roughly one big-integer
  /// multiply, so this keeps a single sequence computation around a second.
  std::uint64_t max_recurrence_ops = 2'000'000;

  /// Vertex cap for the brute-force labelling oracle; 0 means the per-arity
  /// default from oracle_vertex_limit.
  unsigned oracle_vertices = 0;

  unsigned oracle_vertex_limit(unsigned k) const {
    if (oracle_vertices != 0) return oracle_vertices;
    if (k == 2) return 13;
    if (k == 3) return 10;
    return 9;
  }
};

}  // namespace tangenocchi
