#include "unicount/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <utility>

#include "unicount/errors.hpp"
#include "unicount/ff/subspaces.hpp"
#include "unicount/flag_counts.hpp"
#include "unicount/group_orders.hpp"
#include "unicount/reference_table.hpp"
#include "unicount/subspace_counts.hpp"

namespace unicount {

namespace {

using ff::Exec;
using ff::Matrix;
using ff::OracleLimits;
using ff::PrimeField;
using nlohmann::json;

// Collects one named check over many cases; remembers the first failure.
class Aggregate {
 public:
  explicit Aggregate(std::string name) {
    record_.check = std::move(name);
    record_.equal = true;
    record_.parameters = json::object();
  }

  void add(bool equal, json params, const std::string& symbolic,
           const std::string& oracle) {
    ++cases_;
    if (!equal && record_.equal) {
      record_.equal = false;
      record_.parameters["first_failure"] = std::move(params);
      record_.symbolic = symbolic;
      record_.oracle = oracle;
    }
  }

  CheckRecord finish() {
    record_.parameters["cases"] = cases_;
    if (record_.equal) {
      record_.symbolic = "agree";
      record_.oracle = "agree";
    }
    return std::move(record_);
  }

 private:
  CheckRecord record_;
  long cases_ = 0;
};

OracleLimits limits_of(const VerifyOptions& o) {
  OracleLimits limits;
  limits.element_budget = o.element_budget;
  return limits;
}

Matrix stack_rows(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() + b.rows(), a.cols(), a.field());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r.set(a.rows() + i, j, b.at(i, j));
  return r;
}

// ---------------------------------------------------------------------------
// appendix suite: symbolic identities
// ---------------------------------------------------------------------------

// Summing w over all target types of the same codimension must give the
// number of subspaces of the kernel of that codimension.
CheckRecord check_conservation(const VerifyOptions& o) {
  Aggregate agg("conservation");
  bool fault_pending = o.inject_fault;
  for (int n = 1; n <= o.max_n; ++n) {
    for (const Partition& pi : partitions_of(n)) {
      for (int c = 0; c <= pi.num_parts(); ++c) {
        Polynomial lhs = Polynomial::zero();
        for (const Partition& pi2 : partitions_of(n - c))
          lhs += quotient_type_poly(pi, pi2);
        if (fault_pending) {
          lhs += Polynomial::one();  // deliberate corruption, test plumbing
          fault_pending = false;
        }
        const Polynomial rhs = gaussian_binomial(pi.num_parts(), c);
        agg.add(lhs == rhs, {{"partition", pi.str()}, {"codim", c}}, lhs.str(),
                rhs.str());
      }
    }
  }
  return agg.finish();
}

// f and k depend only on the multiset of block sizes, not their order.
CheckRecord check_block_permutation_invariance(const VerifyOptions& o) {
  Aggregate agg("block-permutation-invariance");
  for (int n = 2; n <= o.max_n; ++n) {
    std::map<std::vector<int>, std::vector<BlockComposition>> groups;
    for (const BlockComposition& c : compositions_of(n)) {
      std::vector<int> key = c.blocks();
      std::sort(key.begin(), key.end());
      groups[std::move(key)].push_back(c);
    }
    for (const auto& [key, comps] : groups) {
      const BlockComposition& base = comps.front();
      const Polynomial k_base = class_count_poly(n, base, GroupKind::GL);
      std::map<Partition, Polynomial> f_base;
      for (const Partition& pi : partitions_of(n))
        f_base.emplace(pi, flag_count_poly(pi, DimVector::from_blocks(base)));
      for (size_t i = 1; i < comps.size(); ++i) {
        const Polynomial k_other = class_count_poly(n, comps[i], GroupKind::GL);
        agg.add(k_other == k_base,
                {{"blocks", comps[i].str()}, {"baseline", base.str()}},
                k_base.str(), k_other.str());
        for (const auto& [pi, f_val] : f_base) {
          const Polynomial f_other =
              flag_count_poly(pi, DimVector::from_blocks(comps[i]));
          agg.add(f_other == f_val,
                  {{"blocks", comps[i].str()},
                   {"baseline", base.str()},
                   {"partition", pi.str()}},
                  f_val.str(), f_other.str());
        }
      }
    }
  }
  return agg.finish();
}

CheckRecord check_gl_pgl_factor(const VerifyOptions& o) {
  Aggregate agg("gl-pgl-factor");
  const Polynomial qm1 = Polynomial::variable() - Polynomial::one();
  for (int n = 1; n <= o.max_n; ++n) {
    for (const BlockComposition& c : compositions_of(n)) {
      const Polynomial gl = class_count_poly(n, c, GroupKind::GL);
      const Polynomial pgl = class_count_poly(n, c, GroupKind::PGL);
      agg.add(gl == qm1 * pgl, {{"blocks", c.str()}}, gl.str(),
              (qm1 * pgl).str());
    }
  }
  return agg.finish();
}

CheckRecord check_coefficient_nonnegativity(const VerifyOptions& o) {
  Aggregate agg("coefficient-nonnegativity");
  const auto all_nonneg = [](const Polynomial& p) {
    for (int i = 0; i <= p.degree(); ++i)
      if (p.coeff(i) < 0) return false;
    return true;
  };
  for (int n = 1; n <= o.max_n; ++n)
    for (const BlockComposition& c : compositions_of(n))
      for (const Partition& pi : partitions_of(n)) {
        const Polynomial f = flag_count_poly(pi, DimVector::from_blocks(c));
        agg.add(all_nonneg(f), {{"partition", pi.str()}, {"blocks", c.str()}},
                f.str(), "coefficients >= 0");
      }
  return agg.finish();
}

// Every class count re-expands with nonnegative coefficients in powers of
// q-1 (for GL by the Levi factorization; PGL inherits it because the GL
// expansion has no constant term).
CheckRecord check_qminus1_nonnegativity(const VerifyOptions& o) {
  Aggregate agg("qminus1-nonnegativity");
  const auto check_one = [&agg](int n, const BlockComposition& c, GroupKind kind,
                                const char* kind_name) {
    const Polynomial k = class_count_poly(n, c, kind);
    const std::vector<Int> shifted = qminus1_coeffs(k);
    const bool ok =
        std::all_of(shifted.begin(), shifted.end(), [](const Int& v) { return v >= 0; });
    agg.add(ok, {{"blocks", c.str()}, {"kind", kind_name}}, k.str(),
            "coefficients in q-1 >= 0");
  };
  for (int n = 1; n <= o.max_n; ++n)
    for (const BlockComposition& c : compositions_of(n)) {
      check_one(n, c, GroupKind::GL, "GL");
      check_one(n, c, GroupKind::PGL, "PGL");
    }
  for (int n = o.max_n + 1; n <= 10; ++n) {
    check_one(n, BlockComposition::borel(n), GroupKind::GL, "GL");
    check_one(n, BlockComposition::borel(n), GroupKind::PGL, "PGL");
  }
  return agg.finish();
}

CheckRecord check_reference_table(const VerifyOptions&) {
  Aggregate agg("borel-reference-table");
  for (int n = 2; n <= 10; ++n) {
    const Polynomial computed =
        class_count_poly(n, BlockComposition::borel(n), GroupKind::PGL);
    const Polynomial frozen = class_count_reference(n);
    agg.add(computed == frozen, {{"n", n}}, computed.str(), frozen.str());
  }
  return agg.finish();
}

CheckRecord check_sl3_closed_forms(const VerifyOptions&) {
  Aggregate agg("sl3-closed-forms");
  const Polynomial one_mod3 = sl3_borel_class_count(Sl3Congruence::OneMod3);
  const Polynomial other = sl3_borel_class_count(Sl3Congruence::Other);
  const Polynomial frozen_one({5, -6, -1, 1, 0, 1});
  const Polynomial frozen_other({3, -2, -3, 1, 0, 1});
  agg.add(one_mod3 == frozen_one, {{"congruence", "1 mod 3"}}, one_mod3.str(),
          frozen_one.str());
  agg.add(other == frozen_other, {{"congruence", "other"}}, other.str(),
          frozen_other.str());
  // the split contributes exactly two extra regular classes
  const Polynomial qm1 = Polynomial::variable() - Polynomial::one();
  const Polynomial two_qm1_sq = Polynomial::constant(2) * qm1 * qm1;
  agg.add(one_mod3 - other == two_qm1_sq, {{"identity", "difference"}},
          (one_mod3 - other).str(), two_qm1_sq.str());
  return agg.finish();
}

CheckRecord check_gaussian_symmetry(const VerifyOptions&) {
  Aggregate agg("gaussian-symmetry");
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      agg.add(gaussian_binomial(n, k) == gaussian_binomial(n, n - k),
              {{"n", n}, {"k", k}}, gaussian_binomial(n, k).str(),
              gaussian_binomial(n, n - k).str());
  return agg.finish();
}

CheckRecord check_reduced_fractions(const VerifyOptions& o) {
  Aggregate agg("fixed-point-ratio-reduced");
  const int cap = std::min(o.max_n, 4);
  for (int n = 2; n <= cap; ++n)
    for (const Partition& pi : partitions_of(n)) {
      const PolyFraction r = fixed_point_ratio(pi, BlockComposition::borel(n));
      const Polynomial g = poly_gcd(r.num, r.den);
      Int c;
      mpz_gcd(c.get_mpz_t(), content(r.num).get_mpz_t(),
              content(r.den).get_mpz_t());
      const bool reduced = g.degree() <= 0 && c == 1 && r.den.leading_coeff() > 0;
      agg.add(reduced, {{"partition", pi.str()}},
              r.num.str() + " / " + r.den.str(), "reduced fraction");
    }
  return agg.finish();
}

// ---------------------------------------------------------------------------
// oracle suite: symbolic results against brute force over prime fields
// ---------------------------------------------------------------------------

CheckRecord check_subspace_enumeration(const VerifyOptions& o) {
  Aggregate agg("subspace-enumeration-count");
  for (int p : o.primes) {
    const PrimeField f(p);
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= n; ++k) {
        const Int symbolic = gaussian_binomial(n, k).eval(Int(p));
        const Int oracle(
            static_cast<unsigned long>(ff::SubspaceEnumerator(n, k, f).count()));
        agg.add(symbolic == oracle, {{"n", n}, {"k", k}, {"p", p}},
                symbolic.get_str(), oracle.get_str());
      }
  }
  return agg.finish();
}

CheckRecord check_avoiding_subspaces(const VerifyOptions& o) {
  Aggregate agg("avoiding-subspace-count");
  for (int p : o.primes) {
    const PrimeField f(p);
    for (int n = 0; n <= 4; ++n)
      for (int m = 0; m <= n; ++m)
        for (int l = 0; l <= n; ++l) {
          Matrix fixed(m, n, f);
          for (int i = 0; i < m; ++i) fixed.set(i, i, 1);
          const ff::SubspaceEnumerator subs(n, l, f);
          std::uint64_t brute = 0;
          for (std::uint64_t idx = 0; idx < subs.count(); ++idx)
            if (ff::rank(stack_rows(subs.subspace(idx), fixed)) == l + m) ++brute;
          const Int symbolic = count_avoiding_subspaces(n, m, l).eval(Int(p));
          agg.add(symbolic == Int(static_cast<unsigned long>(brute)),
                  {{"n", n}, {"m", m}, {"l", l}, {"p", p}}, symbolic.get_str(),
                  std::to_string(brute));
        }
  }
  return agg.finish();
}

CheckRecord check_quotient_tally(const VerifyOptions& o) {
  Aggregate agg("quotient-type-tally");
  const int cap = std::min(o.max_n, 4);
  for (int p : o.primes) {
    const PrimeField f(p);
    for (int n = 1; n <= cap; ++n)
      for (const Partition& pi : partitions_of(n)) {
        const Matrix u = ff::jordan_unipotent(pi, f);
        for (int c = 0; c <= pi.num_parts(); ++c) {
          const auto tally = ff::quotient_type_tally(u, c, o.exec, limits_of(o));
          Int total(0);
          for (const auto& [type, count] : tally)
            total += Int(static_cast<unsigned long>(count));
          agg.add(total == gaussian_binomial(pi.num_parts(), c).eval(Int(p)),
                  {{"partition", pi.str()}, {"codim", c}, {"p", p}},
                  gaussian_binomial(pi.num_parts(), c).eval(Int(p)).get_str(),
                  total.get_str());
          for (const Partition& pi2 : partitions_of(n - c)) {
            const Int symbolic = quotient_type_poly(pi, pi2).eval(Int(p));
            const auto it = tally.find(pi2);
            const Int oracle(static_cast<unsigned long>(
                it == tally.end() ? 0 : it->second));
            agg.add(symbolic == oracle,
                    {{"partition", pi.str()},
                     {"target", pi2.str()},
                     {"p", p}},
                    symbolic.get_str(), oracle.get_str());
          }
        }
      }
  }
  return agg.finish();
}

CheckRecord check_radical_flags(const VerifyOptions& o) {
  Aggregate agg("radical-flag-count");
  const int cap = std::min(o.max_n, 4);
  for (int p : o.primes) {
    const PrimeField f(p);
    for (int n = 1; n <= cap; ++n)
      for (const BlockComposition& c : compositions_of(n)) {
        const DimVector d = DimVector::from_blocks(c);
        for (const Partition& pi : partitions_of(n)) {
          const Matrix u = ff::jordan_unipotent(pi, f);
          const std::uint64_t brute =
              ff::count_radical_flags(u, d, o.exec, limits_of(o));
          const Int symbolic = flag_count_poly(pi, d).eval(Int(p));
          agg.add(symbolic == Int(static_cast<unsigned long>(brute)),
                  {{"partition", pi.str()}, {"blocks", c.str()}, {"p", p}},
                  symbolic.get_str(), std::to_string(brute));
        }
      }
  }
  return agg.finish();
}

// On complete flags the stability and radical conditions agree, because the
// induced map on each one-dimensional quotient of a stable flag is nilpotent
// and hence zero.
CheckRecord check_stable_flags_borel(const VerifyOptions& o) {
  Aggregate agg("stable-flag-borel");
  const int cap = std::min(o.max_n, 3);
  for (int p : o.primes) {
    const PrimeField f(p);
    for (int n = 1; n <= cap; ++n)
      for (const Partition& pi : partitions_of(n)) {
        const Matrix u = ff::jordan_unipotent(pi, f);
        const std::uint64_t brute =
            ff::count_stable_flags(u, DimVector::complete(n), o.exec, limits_of(o));
        const Int symbolic =
            flag_count_poly(pi, DimVector::complete(n)).eval(Int(p));
        agg.add(symbolic == Int(static_cast<unsigned long>(brute)),
                {{"partition", pi.str()}, {"p", p}}, symbolic.get_str(),
                std::to_string(brute));
      }
  }
  return agg.finish();
}

CheckRecord check_class_counts(const VerifyOptions& o) {
  Aggregate agg("class-count-burnside");
  const int cap = std::min(o.max_n, 3);
  for (int p : o.primes) {
    const PrimeField f(p);
    for (int n = 1; n <= cap; ++n)
      for (const BlockComposition& c : compositions_of(n))
        for (GroupKind kind : {GroupKind::GL, GroupKind::PGL}) {
          const Int brute = ff::count_classes(c, f, kind, o.exec, limits_of(o));
          const Int symbolic = class_count_poly(n, c, kind).eval(Int(p));
          agg.add(symbolic == brute,
                  {{"blocks", c.str()},
                   {"kind", kind == GroupKind::GL ? "GL" : "PGL"},
                   {"p", p}},
                  symbolic.get_str(), brute.get_str());
        }
  }
  return agg.finish();
}

CheckRecord check_sl3_split(const VerifyOptions& o) {
  Aggregate agg("sl3-congruence-split");
  for (int p : o.primes) {
    const PrimeField f(p);
    const Sl3Congruence congruence =
        (p % 3 == 1) ? Sl3Congruence::OneMod3 : Sl3Congruence::Other;
    const Int symbolic = sl3_borel_class_count(congruence).eval(Int(p));
    const Int brute = ff::count_classes(BlockComposition::borel(3), f,
                                        GroupKind::SL, o.exec, limits_of(o));
    agg.add(symbolic == brute, {{"p", p}, {"congruence", p % 3}},
            symbolic.get_str(), brute.get_str());
  }
  return agg.finish();
}

CheckRecord check_subgroup_counting_identity(const VerifyOptions& o) {
  Aggregate agg("subgroup-counting-identity");
  const std::vector<std::pair<int, int>> cases = {{2, 2}, {2, 3}, {3, 2}};
  for (const auto& [n, p] : cases) {
    if (std::find(o.primes.begin(), o.primes.end(), p) == o.primes.end())
      continue;
    const ff::FormulaCheck result = ff::check_class_count_formula(
        BlockComposition::borel(n), PrimeField(p), limits_of(o));
    agg.add(result.equal, {{"n", n}, {"p", p}}, result.orbit_count.get_str(),
            result.formula_value.get_str());
  }
  return agg.finish();
}

// Interpolating the stable-flag counts over several primes recovers the
// radical-flag polynomial on complete flags; the interpolation itself checks
// integrality, the surplus primes, and the constant term.
CheckRecord check_stable_interpolation(const VerifyOptions& o) {
  Aggregate agg("stable-flag-interpolation");
  const std::vector<int> primes = {2, 3, 5, 7, 11};
  const int cap = std::min(o.max_n, 3);
  for (int n = 1; n <= cap; ++n)
    for (const Partition& pi : partitions_of(n)) {
      const Polynomial interpolated = ff::interpolate_stable_flag_poly(
          pi, DimVector::complete(n), primes, o.exec, limits_of(o));
      const Polynomial symbolic = flag_count_poly(pi, DimVector::complete(n));
      agg.add(interpolated == symbolic, {{"partition", pi.str()}},
              symbolic.str(), interpolated.str());
    }
  return agg.finish();
}

CheckRecord check_jordan_conjugation(const VerifyOptions& o) {
  Aggregate agg("jordan-conjugation-invariance");
  std::mt19937 gen(20240817);
  const int cap = std::min(o.max_n, 4);
  for (int p : o.primes) {
    const PrimeField f(p);
    std::uniform_int_distribution<int> entry(0, p - 1);
    for (int n = 1; n <= cap; ++n)
      for (const Partition& pi : partitions_of(n)) {
        const Matrix y = ff::jordan_nilpotent(pi, f);
        for (int trial = 0; trial < 3; ++trial) {
          Matrix g(n, n, f);
          do {
            for (int i = 0; i < n; ++i)
              for (int j = 0; j < n; ++j) g.set(i, j, entry(gen));
          } while (ff::det(g) == 0);
          const Partition conjugated =
              ff::nilpotent_jordan_type(g * y * ff::inverse(g));
          agg.add(conjugated == pi,
                  {{"partition", pi.str()}, {"p", p}, {"trial", trial}},
                  pi.str(), conjugated.str());
        }
      }
  }
  return agg.finish();
}

}  // namespace

std::vector<CheckRecord> run_appendix_suite(const VerifyOptions& options) {
  std::vector<CheckRecord> records;
  records.push_back(check_conservation(options));
  records.push_back(check_block_permutation_invariance(options));
  records.push_back(check_gl_pgl_factor(options));
  records.push_back(check_coefficient_nonnegativity(options));
  records.push_back(check_qminus1_nonnegativity(options));
  records.push_back(check_reference_table(options));
  records.push_back(check_sl3_closed_forms(options));
  records.push_back(check_gaussian_symmetry(options));
  records.push_back(check_reduced_fractions(options));
  return records;
}

std::vector<CheckRecord> run_oracle_suite(const VerifyOptions& options) {
  std::vector<CheckRecord> records;
  records.push_back(check_subspace_enumeration(options));
  records.push_back(check_avoiding_subspaces(options));
  records.push_back(check_quotient_tally(options));
  records.push_back(check_radical_flags(options));
  records.push_back(check_stable_flags_borel(options));
  records.push_back(check_class_counts(options));
  records.push_back(check_sl3_split(options));
  records.push_back(check_subgroup_counting_identity(options));
  records.push_back(check_stable_interpolation(options));
  records.push_back(check_jordan_conjugation(options));
  return records;
}

bool all_checks_pass(const std::vector<CheckRecord>& records) {
  return std::all_of(records.begin(), records.end(),
                     [](const CheckRecord& r) { return r.equal; });
}

}  // namespace unicount
