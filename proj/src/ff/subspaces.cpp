#include "unicount/ff/subspaces.hpp"

#include <algorithm>

#include "unicount/errors.hpp"

namespace unicount::ff {

SubspaceEnumerator::SubspaceEnumerator(int n, int k, PrimeField f)
    : n_(n), k_(k), f_(f) {
  if (n < 0 || k < 0 || k > n)
    throw InvalidInputError("SubspaceEnumerator: need 0 <= k <= n");

  // Walk all pivot-column combinations in lexicographic order.
  std::vector<int> combo(k);
  for (int i = 0; i < k; ++i) combo[i] = i;
  const auto emit = [&]() {
    PivotPattern pat;
    pat.pivots = combo;
    std::vector<bool> is_pivot(n, false);
    for (int c : combo) is_pivot[c] = true;
    for (int i = 0; i < k_; ++i)
      for (int j = combo[i] + 1; j < n_; ++j)
        if (!is_pivot[j]) pat.free_cells.emplace_back(i, j);
    pat.combos = 1;
    for (size_t t = 0; t < pat.free_cells.size(); ++t)
      pat.combos *= static_cast<std::uint64_t>(f_.p());
    pat.offset = total_;
    total_ += pat.combos;
    patterns_.push_back(std::move(pat));
  };

  if (k == 0) {
    PivotPattern pat;
    pat.combos = 1;
    pat.offset = 0;
    total_ = 1;
    patterns_.push_back(std::move(pat));
    return;
  }
  while (true) {
    emit();
    // next combination
    int i = k - 1;
    while (i >= 0 && combo[i] == n - k + i) --i;
    if (i < 0) break;
    ++combo[i];
    for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
}

Matrix SubspaceEnumerator::subspace(std::uint64_t index) const {
  if (index >= total_)
    throw InvalidInputError("SubspaceEnumerator: index out of range");
  // find the pattern containing this index
  auto it = std::upper_bound(
      patterns_.begin(), patterns_.end(), index,
      [](std::uint64_t v, const PivotPattern& p) { return v < p.offset; });
  const PivotPattern& pat = *std::prev(it);
  std::uint64_t local = index - pat.offset;

  Matrix m(k_, n_, f_);
  for (int i = 0; i < k_ && i < static_cast<int>(pat.pivots.size()); ++i)
    m.set(i, pat.pivots[i], 1);
  for (size_t t = pat.free_cells.size(); t-- > 0;) {
    const auto [row, col] = pat.free_cells[t];
    m.set(row, col, static_cast<int>(local % f_.p()));
    local /= f_.p();
  }
  return m;
}

}  // namespace unicount::ff
