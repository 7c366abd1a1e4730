#pragma once

#include <cstdint>
#include <vector>

#include "unicount/ff/matrix.hpp"

namespace unicount::ff {

// Random-access enumeration of the k-dimensional subspaces of F_p^n, each
// represented once by its reduced row-echelon basis.  Order: pivot-column
// sets lexicographically, then the free entries counting in base p
// (row-major).  The index space is dense, so callers can split [0, count())
// across threads.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(int n, int k, PrimeField f);

  std::uint64_t count() const { return total_; }
  Matrix subspace(std::uint64_t index) const;  // k x n rref basis

 private:
  struct PivotPattern {
    std::vector<int> pivots;
    std::vector<std::pair<int, int>> free_cells;  // (row, col)
    std::uint64_t combos;                         // p^{#free_cells}
    std::uint64_t offset;                         // cumulative start index
  };

  int n_, k_;
  PrimeField f_;
  std::uint64_t total_ = 0;
  std::vector<PivotPattern> patterns_;
};

}  // namespace unicount::ff
