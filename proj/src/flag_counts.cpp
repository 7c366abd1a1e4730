#include "unicount/flag_counts.hpp"

#include <mutex>
#include <utility>

#include "unicount/errors.hpp"
#include "unicount/subspace_counts.hpp"

namespace unicount {

KernelFiltration kernel_filtration(const Partition& pi) {
  KernelFiltration out;
  out.dims.reserve(pi.max_part() + 1);
  for (int j = 0; j <= pi.max_part(); ++j) out.dims.push_back(pi.parts_above(j));
  return out;
}

std::optional<RemovalProfile> removal_profile(const Partition& pi,
                                              const Partition& pi2) {
  const int n = pi.n();
  if (pi2.n() > n) return std::nullopt;

  RemovalProfile rp;
  rp.shrink_counts.assign(n, 0);
  // b_i = sum_{j >= i} (mult_pi(j) - mult_pi2(j)); parts can only shrink.
  int acc = 0;
  for (int i = n; i >= 1; --i) {
    acc += pi.multiplicity(i) - pi2.multiplicity(i);
    if (acc < 0) return std::nullopt;
    rp.shrink_counts[i - 1] = acc;
  }

  rp.intersection_dims.assign(n + 1, 0);
  for (int i = n - 1; i >= 0; --i)
    rp.intersection_dims[i] = rp.intersection_dims[i + 1] + rp.shrink_counts[i];

  // W must fit in the kernel filtration: dim(W cap J_i) <= dim J_i.
  const KernelFiltration filt = kernel_filtration(pi);
  for (int i = 0; i <= n; ++i) {
    int ji = (i < static_cast<int>(filt.dims.size())) ? filt.dims[i] : 0;
    if (rp.intersection_dims[i] > ji) return std::nullopt;
  }
  return rp;
}

Polynomial quotient_type_poly(const Partition& pi, const Partition& pi2) {
  auto rp = removal_profile(pi, pi2);
  if (!rp) return Polynomial::zero();
  if (pi.n() == 0) return Polynomial::one();

  // Count subspaces W of J_0 = ker(y) with dim(W cap J_i) = c_i along the
  // increasing flag J_s <= ... <= J_1 <= J_0, s = max_part - 1.  Repeats in
  // the J-dimensions are fine for the profile counter.
  const KernelFiltration filt = kernel_filtration(pi);
  const int s = pi.max_part() - 1;
  std::vector<int> dims, profile;
  dims.reserve(s + 1);
  profile.reserve(s + 1);
  for (int j = s; j >= 0; --j) {
    dims.push_back(filt.dims[j]);
    profile.push_back(rp->intersection_dims[j]);
  }
  return count_flag_profile_subspaces(dims, profile);
}

const Polynomial* FlagCountCache::lookup(
    const std::pair<std::vector<int>, std::vector<int>>& key) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  return it == table_.end() ? nullptr : &it->second;
}

void FlagCountCache::store(std::pair<std::vector<int>, std::vector<int>> key,
                           Polynomial value) {
  std::unique_lock lock(mutex_);
  table_.emplace(std::move(key), std::move(value));
}

namespace {

Polynomial flag_count_rec(const Partition& pi, const DimVector& d,
                          FlagCountCache& cache) {
  if (d.levels() == 0) return Polynomial::one();  // |pi| == 0 is guaranteed

  auto key = std::make_pair(pi.parts(), d.dims());
  if (const Polynomial* hit = cache.lookup(key)) return *hit;

  // Choose V_1 = W <= ker(y) of dimension d_1; the rest of the flag lives in
  // V/W, where y induces a nilpotent of some smaller type.
  const DimVector rest = d.quotient_by_first();
  Polynomial total;
  for (const Partition& pi2 : partitions_of(pi.n() - d.dim(0))) {
    Polynomial w = quotient_type_poly(pi, pi2);
    if (w.is_zero()) continue;
    total += w * flag_count_rec(pi2, rest, cache);
  }
  cache.store(std::move(key), total);
  return total;
}

}  // namespace

Polynomial flag_count_poly(const Partition& pi, const DimVector& d,
                           FlagCountCache& cache) {
  if (pi.n() != d.ambient())
    throw InvalidInputError("flag_count_poly: |pi| != ambient dimension");
  return flag_count_rec(pi, d, cache);
}

Polynomial flag_count_poly(const Partition& pi, const DimVector& d) {
  FlagCountCache cache;
  return flag_count_poly(pi, d, cache);
}

}  // namespace unicount
