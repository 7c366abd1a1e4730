#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "unicount/composition.hpp"
#include "unicount/ff/matrix.hpp"
#include "unicount/partitions.hpp"
#include "unicount/polynomial.hpp"

namespace unicount::ff {

// Brute-force counts over a concrete prime field.  These are the independent
// ground truth the symbolic polynomials are checked against: no formula from
// the symbolic side is reused here beyond basic linear algebra.
//
// Every operation bounds its enumeration up front and throws
// ResourceLimitError when the bound exceeds the element budget; refusals are
// deterministic, never time-based.  The parallel paths split dense index
// ranges across OpenMP threads and reduce exactly; the serial paths are the
// reference implementations and stay around for differential testing.

enum class Exec { Serial, Parallel };

struct OracleLimits {
  std::uint64_t element_budget = 10'000'000;
};

// Number of flags 0 < V_1 < ... < V_r = F_p^n with the given dimensions and
// y(V_i) <= V_{i-1} for all i, where y = u - 1.
std::uint64_t count_radical_flags(const Matrix& u, const DimVector& d,
                                  Exec exec = Exec::Parallel,
                                  const OracleLimits& limits = {});

// Same, but with the weaker stability condition u(V_i) = V_i.
std::uint64_t count_stable_flags(const Matrix& u, const DimVector& d,
                                 Exec exec = Exec::Parallel,
                                 const OracleLimits& limits = {});

// For every codim-sized subspace W of ker(u - 1), the Jordan type of the
// map u induces on V/W; returns type -> count.
std::map<Partition, std::uint64_t> quotient_type_tally(
    const Matrix& u, int codim, Exec exec = Exec::Parallel,
    const OracleLimits& limits = {});

// |C_G(v)| for G = GL_n(F_p) or SL_n(F_p): enumerate the commutant of v and
// count the invertible (resp. det-1) elements.  The identity short-circuits
// to the closed-form group order.
Int centralizer_order(const Matrix& v, GroupKind kind,
                      Exec exec = Exec::Parallel,
                      const OracleLimits& limits = {});

// k(U, G) for the standard block radical U over F_p, by Burnside averaging
// |C_G(v)| over v in U.  GL and SL average directly; PGL divides each GL
// centralizer by p-1 (a unipotent's conjugates share the eigenvalue 1, so
// scalars are exactly the fuzz).  The averages are checked to divide evenly.
Int count_classes(const BlockComposition& blocks, PrimeField f, GroupKind kind,
                  Exec exec = Exec::Parallel, const OracleLimits& limits = {});

// Exhaustive two-sided check of the subgroup-counting identity
//   k(H, G) = |N_G(H)| / |H| * sum over G-class reps x of #{conjugates of H
//   containing x}
// for H the block radical in G = GL_n(F_p).  The left side is a literal
// orbit partition of G under H-conjugation; the right side enumerates the
// conjugate subgroups and the normalizer directly.
struct FormulaCheck {
  Int orbit_count;    // left side
  Int formula_value;  // right side
  Int normalizer_order;
  Int subgroup_conjugates;
  bool equal = false;
};

FormulaCheck check_class_count_formula(const BlockComposition& blocks,
                                       PrimeField f,
                                       const OracleLimits& limits = {});

// Interpolate the stable-flag count of a type-pi unipotent on the flag
// variety of shape d from its values over the given primes.  Degree bound =
// the radical exponent of d's blocks; needs at least bound+1 primes, checks
// any extras, and requires integer coefficients and constant term 1.
Polynomial interpolate_stable_flag_poly(const Partition& pi, const DimVector& d,
                                        const std::vector<int>& primes,
                                        Exec exec = Exec::Parallel,
                                        const OracleLimits& limits = {});

// The elements of the block radical U as a dense index space: identity on
// the diagonal blocks, free entries above them.  count() == p^N.
class RadicalEnumerator {
 public:
  RadicalEnumerator(const BlockComposition& blocks, PrimeField f);

  std::uint64_t count() const { return total_; }
  Matrix element(std::uint64_t index) const;

 private:
  int n_;
  PrimeField f_;
  std::vector<std::pair<int, int>> cells_;
  std::uint64_t total_;
};

}  // namespace unicount::ff
