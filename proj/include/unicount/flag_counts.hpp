#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "unicount/composition.hpp"
#include "unicount/partitions.hpp"
#include "unicount/polynomial.hpp"

namespace unicount {

// For a nilpotent y of Jordan type pi acting on V, the kernel of y is
// filtered by J_j = ker(y) cap im(y^j); dims[j] = dim J_j = number of parts
// of pi greater than j, for j = 0 .. max_part(pi).
struct KernelFiltration {
  std::vector<int> dims;
};

KernelFiltration kernel_filtration(const Partition& pi);

// Data of a type transition pi -> pi2 by quotienting out a subspace W of
// ker(y):  shrink_counts[j-1] = b_j = number of parts moving from size j to
// j-1, and intersection_dims[i] = c_i = sum_{j>i} b_j = the forced value of
// dim(W cap J_i).  dim W = c_0 = |pi| - |pi2|.
struct RemovalProfile {
  std::vector<int> shrink_counts;      // b_1 .. b_n
  std::vector<int> intersection_dims;  // c_0 .. c_n
};

// nullopt when the transition is impossible (a part would have to grow, or
// W would not fit inside the filtration).
std::optional<RemovalProfile> removal_profile(const Partition& pi,
                                              const Partition& pi2);

// w(pi, pi2): the number of subspaces W <= ker(y) such that the induced
// nilpotent on V/W has type pi2, as a polynomial in the field size.
Polynomial quotient_type_poly(const Partition& pi, const Partition& pi2);

// Memo table for flag_count_poly, keyed by (partition, flag dims).  Safe for
// concurrent use; recomputing a value concurrently is harmless because the
// function is pure.
class FlagCountCache {
 public:
  const Polynomial* lookup(const std::pair<std::vector<int>, std::vector<int>>& key) const;
  void store(std::pair<std::vector<int>, std::vector<int>> key, Polynomial value);

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, Polynomial> table_;
};

// f(pi, d): the number of flags 0 = V_0 <= V_1 <= ... <= V_r = V with
// dim V_i = d_i and y(V_i) <= V_{i-1} for all i, where y is nilpotent of
// Jordan type pi -- equivalently the number of conjugates of the standard
// block-upper unipotent radical containing the unipotent 1 + y.  Polynomial
// in the field size.  pre: |pi| == d.ambient().
Polynomial flag_count_poly(const Partition& pi, const DimVector& d);
Polynomial flag_count_poly(const Partition& pi, const DimVector& d,
                           FlagCountCache& cache);

}  // namespace unicount
