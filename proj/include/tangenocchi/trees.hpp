#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tangenocchi/budgets.hpp"
#include "tangenocchi/nat.hpp"

namespace tangenocchi::trees {

/// Complete k-ary tree shape: every vertex has exactly k children or none.
/// A shape with n internal vertices has kn+1 vertices and (k-1)n+1 leaves.
/// Immutable after construction.
class KTreeShape {
 public:
  static KTreeShape leaf(unsigned k);
  static KTreeShape node(unsigned k, std::vector<KTreeShape> children);

  /// Parses the preorder serialization over {I, L} produced by to_string().
  static KTreeShape parse(std::string_view text, unsigned k);

  unsigned arity() const { return k_; }
  bool is_leaf() const { return children_.empty(); }
  const std::vector<KTreeShape>& children() const { return children_; }
  std::size_t vertex_count() const { return vertices_; }
  std::size_t internal_count() const { return (vertices_ - 1) / k_; }
  std::size_t leaf_count() const { return vertices_ - internal_count(); }
  std::string to_string() const;

  friend bool operator==(const KTreeShape& a, const KTreeShape& b);

 private:
  KTreeShape(unsigned k, std::vector<KTreeShape> children);

  unsigned k_;
  std::vector<KTreeShape> children_;
  std::size_t vertices_;
};

/// Total order on shapes: by vertex count, then by children compared
/// lexicographically (recursively). Any fixed total order works for picking
/// class representatives; this one is cheap and deterministic.
bool shape_less(const KTreeShape& a, const KTreeShape& b);

/// One hook length per vertex (number of descendants, self included),
/// sorted ascending, with the exact product.
struct HookProfile {
  std::vector<std::uint64_t> hooks;
  Nat product;
};

/// One pivoting equivalence class: shapes identified under permuting the k
/// subtrees of any internal vertex.
struct PivotClass {
  KTreeShape canonical;
  Nat class_size;    // number of shapes in the class
  Nat hook_product;  // shared by every shape in the class
  Nat labelings;     // increasing labellings of any one shape
  Nat total;         // class_size * labelings
  Nat quotient;      // (k^2 n-kn+k)! total / ((k!)^(kn+1) (kn+1)!)
};

/// All complete k-ary shapes with kn+1 vertices in a fixed deterministic
/// order; the count is the Fuss-Catalan number C_k(n) and is checked against
/// budgets.max_enumeration before any construction happens.
std::vector<KTreeShape> enumerate_shapes(unsigned k, unsigned n,
                                         const Budgets& budgets = {});

HookProfile hook_profile(const KTreeShape& shape);

/// Hook length formula: vertex_count! / hook product. The division is exact
/// for every shape; an inexact one signals a bug, not a user error.
Nat labelings_by_formula(const KTreeShape& shape);

/// Counts increasing labellings by direct backtracking over label
/// assignments. Independent of the hook formula; the oracle side of the
/// dual-route check. Subject to budgets.oracle_vertex_limit.
Nat labelings_by_bruteforce(const KTreeShape& shape, const Budgets& budgets = {});

/// Recursively sorts every internal vertex's children under shape_less.
/// Two shapes are pivot-equivalent iff their canonical forms are equal.
KTreeShape canonical_form(const KTreeShape& shape);

/// Size of the pivot class of a canonical shape, via the per-vertex
/// multiset-permutation product. pivot_classes cross-checks this against
/// the enumeration grouping. Rejects non-canonical input.
Nat orbit_size(const KTreeShape& canonical);

/// Groups all shapes with kn+1 vertices by canonical form and fills in the
/// per-class statistics, ordered by shape_less on the representative.
/// A non-integral quotient throws VerificationError: it would contradict
/// the per-class divisibility.
std::vector<PivotClass> pivot_classes(unsigned k, unsigned n,
                                      const Budgets& budgets = {});

/// Replaces every leaf by the (k+1)-vertex complete k-ary tree. An input
/// with kn+1 vertices yields k^2 n+k+1 vertices and k^2 n-kn+k leaves.
KTreeShape expand_leaves(const KTreeShape& shape);

struct ClassDivisibilityEntry {
  std::string canonical;
  Nat quotient;             // meaningful when quotient_integral
  bool quotient_integral;   // (k!)^(kn+1) | (k^2 n-kn+k)! total / (kn+1)!
  std::optional<bool> leaf_label_strong;  // k=2: 2^(2n+1) | (2n+2)! class_size
};

struct ClassDivisibilityReport {
  unsigned k;
  unsigned n;
  bool pass;
  std::vector<ClassDivisibilityEntry> classes;
  Nat quotient_sum;
};

/// Per-class divisibility check. For k = 2 the leaf-labelled count
/// (2n+2)! * class_size is additionally checked against the stronger
/// modulus 2^(2n+1).
ClassDivisibilityReport verify_class_divisibility(unsigned k, unsigned n,
                                                  const Budgets& budgets = {});

/// Sum over classes of hook product times quotient. Checked against the
/// closed form f(n) from the series module (VerificationError on mismatch).
Nat class_weighted_sum(unsigned k, unsigned n, const Budgets& budgets = {});

}  // namespace tangenocchi::trees
