#pragma once

#include <string>

#include "unicount/composition.hpp"
#include "unicount/flag_counts.hpp"
#include "unicount/partitions.hpp"
#include "unicount/polynomial.hpp"

namespace unicount {

// |GL_k(F_q)| = prod_{i=0}^{k-1} (q^k - q^i) as a polynomial in q.
Polynomial gl_order(int k);

// Order of the standard Levi subgroup with the given blocks:
// GL: prod |GL_{a_i}|;  PGL: that divided by (q - 1).  SL is not a Levi
// flavor here and is rejected.
Polynomial levi_order(const BlockComposition& c, GroupKind kind);

// dim of the unipotent radical of the standard parabolic with these blocks:
// (n^2 - sum a_i^2) / 2.
int radical_exponent(const BlockComposition& c);

// k(U, G): number of U-conjugacy classes contained in G = GL_n or PGL_n,
// where U is the unipotent radical of the standard parabolic with the given
// blocks.  Equals levi_order * sum over Jordan types pi of flag_count_poly.
Polynomial class_count_poly(int n, const BlockComposition& c, GroupKind kind);

// Same count for the Borel radical inside SL_3.  The regular unipotent class
// of SL_3 splits into three when q = 1 mod 3, so the polynomial depends only
// on that congruence.
enum class Sl3Congruence { OneMod3, Other };
Polynomial sl3_borel_class_count(Sl3Congruence congruence);

// Number of pairs (u, g) with u in U, g in G, ug = gu:  q^N * k(U, G).
Polynomial commuting_pairs_poly(int n, const BlockComposition& c, GroupKind kind);

// Fixed-point ratio of a unipotent of type pi on GL_n / P as an exact reduced
// fraction of integer polynomials: |P| * f(pi, d) / |GL_n|.  The denominator
// is normalized to a positive leading coefficient.
struct PolyFraction {
  Polynomial num;
  Polynomial den;
};

PolyFraction fixed_point_ratio(const Partition& pi, const BlockComposition& c);

enum class OutputFormat { Text, Json, Latex };

std::string render_polynomial(const Polynomial& p, OutputFormat format);

// The table of Borel-radical class counts k(U_n, PGL_n) for n = 2..max_n.
// Text is one "n=k: poly" line per n; Json is an array of row objects;
// Latex is a two-column tabular.  pre: 2 <= max_n <= 10.
std::string render_class_count_table(int max_n, OutputFormat format);

}  // namespace unicount
