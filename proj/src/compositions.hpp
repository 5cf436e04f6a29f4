#pragma once

#include <vector>

namespace tangenocchi::internal {

// Advances a weak composition of fixed total to its lexicographic successor.
// Iteration starts from (0, ..., 0, total); the last composition is
// (total, 0, ..., 0). Returns false once exhausted.
inline bool next_composition(std::vector<unsigned long>& c) {
  std::size_t i = c.size();
  while (i > 0 && c[i - 1] == 0) --i;
  if (i <= 1) return false;  // all weight is in c[0]
  unsigned long moved = c[i - 1] - 1;
  c[i - 1] = 0;
  c[i - 2] += 1;
  c.back() += moved;
  return true;
}

}  // namespace tangenocchi::internal
