#include "unicount/ff/oracle.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "unicount/errors.hpp"
#include "unicount/ff/subspaces.hpp"
#include "unicount/group_orders.hpp"
#include "unicount/subspace_counts.hpp"

namespace unicount::ff {

namespace {

Int int_pow(int base, int exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return r;
}

Int budget_as_int(const OracleLimits& limits) {
  return Int(static_cast<unsigned long>(limits.element_budget));
}

// |GL_n(F_p)| resp. |SL_n(F_p)| by the closed product formula.
Int group_order_int(int n, int p, GroupKind kind) {
  Int pn = int_pow(p, n);
  Int r(1);
  for (int i = 0; i < n; ++i) r *= pn - int_pow(p, i);
  if (kind == GroupKind::SL) {
    Int q = r / (p - 1);
    return q;
  }
  return r;
}

std::vector<std::uint8_t> get_row(const Matrix& m, int i) {
  std::vector<std::uint8_t> v(m.cols());
  for (int j = 0; j < m.cols(); ++j) v[j] = static_cast<std::uint8_t>(m.at(i, j));
  return v;
}

Matrix stack_rows(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() + b.rows(), a.cols(), a.field());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r.set(a.rows() + i, j, b.at(i, j));
  return r;
}

// Rows of `pool` that extend rowspace(base) to rowspace(base + pool),
// greedily; they are independent modulo base.
Matrix complement_rows(const Matrix& base, const Matrix& pool) {
  Matrix cur = base;
  int cur_rank = rank(base);
  std::vector<std::vector<std::uint8_t>> keep;
  for (int i = 0; i < pool.rows(); ++i) {
    Matrix test(cur.rows() + 1, cur.cols(), cur.field());
    for (int r = 0; r < cur.rows(); ++r)
      for (int j = 0; j < cur.cols(); ++j) test.set(r, j, cur.at(r, j));
    for (int j = 0; j < cur.cols(); ++j) test.set(cur.rows(), j, pool.at(i, j));
    if (rank(test) > cur_rank) {
      cur = std::move(test);
      ++cur_rank;
      keep.push_back(get_row(pool, i));
    }
  }
  Matrix out(static_cast<int>(keep.size()), base.cols(), base.field());
  for (size_t i = 0; i < keep.size(); ++i)
    for (int j = 0; j < base.cols(); ++j) out.set(static_cast<int>(i), j, keep[i][j]);
  return out;
}

bool rows_stable(const Matrix& v, const Matrix& y) {
  const RrefResult r = rref(v);
  const Matrix img = act_rows(v, y);
  for (int i = 0; i < img.rows(); ++i)
    if (!in_row_space(r, get_row(img, i))) return false;
  return true;
}

void require_unipotent(const Matrix& u) {
  if (u.rows() != u.cols())
    throw DimensionMismatchError("oracle: matrix is not square");
  nilpotent_jordan_type(u - Matrix::identity(u.rows(), u.field()));
}

// Upper bound on the number of subspace candidates the flag enumeration can
// touch, used for the deterministic refusal.  Ignores pruning, so it only
// over-refuses, never under-refuses.
void check_flag_budget(int n, const std::vector<int>& dims, int p,
                       const OracleLimits& limits) {
  Int est(1);
  int prev = 0;
  for (int d : dims) {
    est *= gaussian_binomial(n - prev, d - prev).eval(Int(p));
    prev = d;
  }
  if (est > budget_as_int(limits))
    throw ResourceLimitError("flag enumeration exceeds the element budget");
}

std::uint64_t flags_from_level(const Matrix& y, const std::vector<int>& dims,
                               bool radical, size_t level, const Matrix& vprev,
                               bool parallel_here);

std::uint64_t flags_with_candidate(const Matrix& y, const std::vector<int>& dims,
                                   bool radical, size_t level, const Matrix& vprev,
                                   const Matrix& comp, const SubspaceEnumerator& subs,
                                   std::uint64_t idx) {
  const Matrix coords = subs.subspace(idx);          // k x m
  const Matrix added = coords * comp;                // k x n
  const Matrix vnext = row_space_basis(stack_rows(vprev, added));
  if (!radical && !rows_stable(vnext, y)) return 0;
  return flags_from_level(y, dims, radical, level + 1, vnext, false);
}

std::uint64_t flags_from_level(const Matrix& y, const std::vector<int>& dims,
                               bool radical, size_t level, const Matrix& vprev,
                               bool parallel_here) {
  if (level == dims.size()) return 1;
  const PrimeField f = y.field();
  const int k = dims[level] - vprev.rows();
  const Matrix bound =
      radical ? preimage_rows(y, vprev) : Matrix::identity(y.rows(), f);
  const Matrix comp = complement_rows(vprev, bound);
  if (k < 0 || k > comp.rows()) return 0;
  const SubspaceEnumerator subs(comp.rows(), k, f);

  std::uint64_t total = 0;
  if (parallel_here) {
    const long long cnt = static_cast<long long>(subs.count());
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (long long idx = 0; idx < cnt; ++idx)
      total += flags_with_candidate(y, dims, radical, level, vprev, comp, subs,
                                    static_cast<std::uint64_t>(idx));
  } else {
    for (std::uint64_t idx = 0; idx < subs.count(); ++idx)
      total += flags_with_candidate(y, dims, radical, level, vprev, comp, subs, idx);
  }
  return total;
}

std::uint64_t count_flags(const Matrix& u, const DimVector& d, bool radical,
                          Exec exec, const OracleLimits& limits) {
  require_unipotent(u);
  if (d.ambient() != u.rows())
    throw DimensionMismatchError("oracle: flag ambient dimension != matrix size");
  if (d.levels() == 0) return 1;
  check_flag_budget(u.rows(), d.dims(), u.field().p(), limits);
  const Matrix y = u - Matrix::identity(u.rows(), u.field());
  const Matrix empty(0, u.rows(), u.field());
  return flags_from_level(y, d.dims(), radical, 0, empty,
                          exec == Exec::Parallel);
}

}  // namespace

std::uint64_t count_radical_flags(const Matrix& u, const DimVector& d, Exec exec,
                                  const OracleLimits& limits) {
  return count_flags(u, d, /*radical=*/true, exec, limits);
}

std::uint64_t count_stable_flags(const Matrix& u, const DimVector& d, Exec exec,
                                 const OracleLimits& limits) {
  return count_flags(u, d, /*radical=*/false, exec, limits);
}

namespace {

Partition quotient_type_of(const Matrix& u, const Matrix& kernel,
                           const SubspaceEnumerator& subs, std::uint64_t idx) {
  const PrimeField f = u.field();
  const int n = u.rows();
  const Matrix coords = subs.subspace(idx);  // c x dim(kernel)
  const Matrix w = coords * kernel;          // c x n
  const int c = w.rows();
  // basis adapted to W: its rows first, then any completion
  const Matrix t = stack_rows(w, complement_rows(w, Matrix::identity(n, f)));
  const Matrix tinv = inverse(t);
  const Matrix coord_img = act_rows(t, u) * tinv;  // row i: u(b_i) in basis t
  Matrix q(n - c, n - c, f);
  for (int i = c; i < n; ++i)
    for (int j = c; j < n; ++j) q.set(i - c, j - c, coord_img.at(i, j));
  return nilpotent_jordan_type(q - Matrix::identity(n - c, f));
}

}  // namespace

std::map<Partition, std::uint64_t> quotient_type_tally(const Matrix& u, int codim,
                                                       Exec exec,
                                                       const OracleLimits& limits) {
  require_unipotent(u);
  if (codim < 0) throw InvalidInputError("quotient_type_tally: negative codim");
  const Matrix y = u - Matrix::identity(u.rows(), u.field());
  const Matrix kernel = kernel_basis(y);
  std::map<Partition, std::uint64_t> tally;
  if (codim > kernel.rows()) return tally;

  if (gaussian_binomial(kernel.rows(), codim).eval(Int(u.field().p())) >
      budget_as_int(limits))
    throw ResourceLimitError("subspace enumeration exceeds the element budget");
  const SubspaceEnumerator subs(kernel.rows(), codim, u.field());

  if (exec == Exec::Parallel) {
    const long long cnt = static_cast<long long>(subs.count());
#pragma omp parallel
    {
      std::map<Partition, std::uint64_t> local;
#pragma omp for schedule(dynamic) nowait
      for (long long idx = 0; idx < cnt; ++idx)
        ++local[quotient_type_of(u, kernel, subs, static_cast<std::uint64_t>(idx))];
#pragma omp critical(unicount_tally_merge)
      for (auto& [type, count] : local) tally[type] += count;
    }
  } else {
    for (std::uint64_t idx = 0; idx < subs.count(); ++idx)
      ++tally[quotient_type_of(u, kernel, subs, idx)];
  }
  return tally;
}

namespace {

// Basis of {x : vx == xv} as rows of length n^2.
Matrix commutant_basis(const Matrix& v) {
  const int n = v.rows();
  const PrimeField f = v.field();
  Matrix a(n * n, n * n, f);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int row = i * n + j;
      for (int k = 0; k < n; ++k) {
        // coefficient of X_{k,j}: +v_{i,k};  of X_{i,k}: -v_{k,j}
        a.set(row, k * n + j, f.add(a.at(row, k * n + j), v.at(i, k)));
        a.set(row, i * n + k, f.sub(a.at(row, i * n + k), v.at(k, j)));
      }
    }
  return kernel_basis(a);
}

Matrix combo_matrix(const Matrix& basis, int n, std::uint64_t idx) {
  const PrimeField f = basis.field();
  const int p = f.p();
  Matrix x(n, n, f);
  for (int t = 0; t < basis.rows(); ++t) {
    const int digit = static_cast<int>(idx % p);
    idx /= p;
    if (digit == 0) continue;
    for (int e = 0; e < n * n; ++e) {
      const int cur = x.at(e / n, e % n);
      x.set(e / n, e % n, f.add(cur, f.mul(digit, basis.at(t, e))));
    }
  }
  return x;
}

}  // namespace

Int centralizer_order(const Matrix& v, GroupKind kind, Exec exec,
                      const OracleLimits& limits) {
  if (v.rows() != v.cols())
    throw DimensionMismatchError("centralizer_order: not square");
  if (kind == GroupKind::PGL)
    throw InvalidInputError("centralizer_order: PGL is handled in count_classes");
  if (det(v) == 0) throw InvalidInputError("centralizer_order: matrix not invertible");
  const int n = v.rows();
  const int p = v.field().p();
  if (v == Matrix::identity(n, v.field())) return group_order_int(n, p, kind);

  const Matrix basis = commutant_basis(v);
  if (int_pow(p, basis.rows()) > budget_as_int(limits))
    throw ResourceLimitError("commutant enumeration exceeds the element budget");
  std::uint64_t combos = 1;
  for (int t = 0; t < basis.rows(); ++t) combos *= static_cast<std::uint64_t>(p);

  const bool want_sl = (kind == GroupKind::SL);
  std::uint64_t count = 0;
  if (exec == Exec::Parallel) {
    const long long cnt = static_cast<long long>(combos);
#pragma omp parallel for schedule(static) reduction(+ : count)
    for (long long idx = 0; idx < cnt; ++idx) {
      const int dv = det(combo_matrix(basis, n, static_cast<std::uint64_t>(idx)));
      if (want_sl ? (dv == 1) : (dv != 0)) ++count;
    }
  } else {
    for (std::uint64_t idx = 0; idx < combos; ++idx) {
      const int dv = det(combo_matrix(basis, n, idx));
      if (want_sl ? (dv == 1) : (dv != 0)) ++count;
    }
  }
  return Int(static_cast<unsigned long>(count));
}

RadicalEnumerator::RadicalEnumerator(const BlockComposition& blocks, PrimeField f)
    : n_(blocks.n()), f_(f), total_(1) {
  std::vector<int> block_of(n_);
  int idx = 0, b = 0;
  for (int size : blocks.blocks()) {
    for (int t = 0; t < size; ++t) block_of[idx++] = b;
    ++b;
  }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (block_of[i] < block_of[j]) cells_.emplace_back(i, j);
  for (size_t t = 0; t < cells_.size(); ++t) {
    if (total_ > UINT64_MAX / static_cast<std::uint64_t>(f_.p()))
      throw ResourceLimitError("radical enumeration index would overflow");
    total_ *= static_cast<std::uint64_t>(f_.p());
  }
}

Matrix RadicalEnumerator::element(std::uint64_t index) const {
  if (index >= total_)
    throw InvalidInputError("RadicalEnumerator: index out of range");
  Matrix m = Matrix::identity(n_, f_);
  for (size_t t = cells_.size(); t-- > 0;) {
    m.set(cells_[t].first, cells_[t].second, static_cast<int>(index % f_.p()));
    index /= f_.p();
  }
  return m;
}

Int count_classes(const BlockComposition& blocks, PrimeField f, GroupKind kind,
                  Exec exec, const OracleLimits& limits) {
  const RadicalEnumerator rad(blocks, f);
  if (Int(static_cast<unsigned long>(rad.count())) > budget_as_int(limits))
    throw ResourceLimitError("radical enumeration exceeds the element budget");
  const int p = f.p();
  const int n = blocks.n();
  // Worst-case commutant of a non-identity unipotent has dimension
  // (n-1)^2 + 1; refuse up front so no throw escapes the parallel loop.
  if (rad.count() > 1 &&
      int_pow(p, (n - 1) * (n - 1) + 1) > budget_as_int(limits))
    throw ResourceLimitError("centralizer enumeration exceeds the element budget");
  const GroupKind cent_kind = (kind == GroupKind::SL) ? GroupKind::SL : GroupKind::GL;

  Int sum(0);
  const long long cnt = static_cast<long long>(rad.count());
  if (exec == Exec::Parallel) {
#pragma omp parallel
    {
      Int local(0);
#pragma omp for schedule(dynamic) nowait
      for (long long idx = 0; idx < cnt; ++idx) {
        Int c = centralizer_order(rad.element(static_cast<std::uint64_t>(idx)),
                                  cent_kind, Exec::Serial, limits);
        if (kind == GroupKind::PGL) {
          if (c % (p - 1) != 0)
            throw std::logic_error("PGL centralizer not divisible by p-1");
          c /= (p - 1);
        }
        local += c;
      }
#pragma omp critical(unicount_burnside_merge)
      sum += local;
    }
  } else {
    for (long long idx = 0; idx < cnt; ++idx) {
      Int c = centralizer_order(rad.element(static_cast<std::uint64_t>(idx)),
                                cent_kind, Exec::Serial, limits);
      if (kind == GroupKind::PGL) {
        if (c % (p - 1) != 0)
          throw std::logic_error("PGL centralizer not divisible by p-1");
        c /= (p - 1);
      }
      sum += c;
    }
  }

  const Int order(static_cast<unsigned long>(rad.count()));
  if (sum % order != 0)
    throw std::logic_error("Burnside sum not divisible by the radical order");
  return sum / order;
}

FormulaCheck check_class_count_formula(const BlockComposition& blocks, PrimeField f,
                                       const OracleLimits& limits) {
  const int n = blocks.n();
  const int p = f.p();
  if (int_pow(p, n * n) > budget_as_int(limits))
    throw ResourceLimitError("group enumeration exceeds the element budget");

  // list all of G = GL_n(F_p)
  std::vector<Matrix> group;
  {
    std::uint64_t space = 1;
    for (int t = 0; t < n * n; ++t) space *= static_cast<std::uint64_t>(p);
    for (std::uint64_t idx = 0; idx < space; ++idx) {
      Matrix m(n, n, f);
      std::uint64_t v = idx;
      for (int e = 0; e < n * n; ++e) {
        m.set(e / n, e % n, static_cast<int>(v % p));
        v /= p;
      }
      if (det(m) != 0) group.push_back(std::move(m));
    }
  }
  if (Int(static_cast<unsigned long>(group.size())) *
          Int(static_cast<unsigned long>(group.size())) >
      budget_as_int(limits))
    throw ResourceLimitError("orbit partition exceeds the element budget");

  const RadicalEnumerator rad(blocks, f);
  std::vector<Matrix> subgroup, subgroup_inv;
  subgroup.reserve(rad.count());
  for (std::uint64_t i = 0; i < rad.count(); ++i) {
    subgroup.push_back(rad.element(i));
    subgroup_inv.push_back(inverse(subgroup.back()));
  }

  const auto orbit_partition = [&](const std::vector<Matrix>& conjugators,
                                   const std::vector<Matrix>& conjugators_inv,
                                   std::vector<Matrix>* reps_out) {
    std::unordered_set<std::uint64_t> visited;
    Int orbits(0);
    for (const Matrix& g : group) {
      if (visited.count(g.key())) continue;
      orbits += 1;
      if (reps_out) reps_out->push_back(g);
      std::queue<Matrix> todo;
      todo.push(g);
      visited.insert(g.key());
      while (!todo.empty()) {
        const Matrix x = todo.front();
        todo.pop();
        for (size_t t = 0; t < conjugators.size(); ++t) {
          Matrix c = conjugators[t] * x * conjugators_inv[t];
          if (visited.insert(c.key()).second) todo.push(std::move(c));
        }
      }
    }
    return orbits;
  };

  FormulaCheck out;
  out.orbit_count = orbit_partition(subgroup, subgroup_inv, nullptr);

  // representatives of all G-classes
  std::vector<Matrix> reps;
  {
    std::vector<Matrix> group_inv;
    group_inv.reserve(group.size());
    for (const Matrix& g : group) group_inv.push_back(inverse(g));
    orbit_partition(group, group_inv, &reps);
  }

  // the distinct conjugates of the subgroup, and its normalizer
  const auto canonical_conjugate = [&](const Matrix& g, const Matrix& ginv) {
    std::vector<std::uint64_t> keys;
    keys.reserve(subgroup.size());
    for (const Matrix& h : subgroup) keys.push_back((g * h * ginv).key());
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  std::vector<std::uint64_t> self_keys;
  for (const Matrix& h : subgroup) self_keys.push_back(h.key());
  std::sort(self_keys.begin(), self_keys.end());

  std::set<std::vector<std::uint64_t>> distinct;
  Int normalizer(0);
  for (const Matrix& g : group) {
    std::vector<std::uint64_t> keys = canonical_conjugate(g, inverse(g));
    if (keys == self_keys) normalizer += 1;
    distinct.insert(std::move(keys));
  }
  out.normalizer_order = normalizer;
  out.subgroup_conjugates = Int(static_cast<unsigned long>(distinct.size()));

  std::vector<std::unordered_set<std::uint64_t>> members;
  members.reserve(distinct.size());
  for (const auto& keys : distinct)
    members.emplace_back(keys.begin(), keys.end());

  Int fsum(0);
  for (const Matrix& rep : reps) {
    const std::uint64_t k = rep.key();
    for (const auto& memb : members)
      if (memb.count(k)) fsum += 1;
  }
  const Int h_order(static_cast<unsigned long>(subgroup.size()));
  if (normalizer % h_order != 0)
    throw std::logic_error("normalizer order not divisible by subgroup order");
  out.formula_value = normalizer / h_order * fsum;
  out.equal = (out.orbit_count == out.formula_value);
  return out;
}

Polynomial interpolate_stable_flag_poly(const Partition& pi, const DimVector& d,
                                        const std::vector<int>& primes, Exec exec,
                                        const OracleLimits& limits) {
  if (pi.n() != d.ambient())
    throw InvalidInputError("interpolate_stable_flag_poly: |pi| != ambient dimension");
  const int bound = radical_exponent(BlockComposition(d.block_sizes()));
  if (static_cast<int>(primes.size()) < bound + 1)
    throw InvalidInputError("interpolate_stable_flag_poly: need at least " +
                            std::to_string(bound + 1) + " primes");
  std::vector<std::pair<Int, Int>> samples;
  samples.reserve(primes.size());
  for (int p : primes) {
    const PrimeField f(p);
    const Matrix u = jordan_unipotent(pi, f);
    const std::uint64_t value = count_stable_flags(u, d, exec, limits);
    samples.emplace_back(Int(p), Int(static_cast<unsigned long>(value)));
  }
  Polynomial poly = interpolate(samples, bound);
  if (poly.coeff(0) != 1)
    throw ConstantTermError("interpolate_stable_flag_poly: constant term is " +
                            poly.coeff(0).get_str() + ", expected 1");
  return poly;
}

}  // namespace unicount::ff
