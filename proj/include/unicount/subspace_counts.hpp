#pragma once

#include <vector>

#include "unicount/polynomial.hpp"

namespace unicount {

// Gaussian binomial [a choose b]_q: the number of b-dimensional subspaces of
// F_q^a, as a polynomial in q.  Zero when b < 0 or b > a.
Polynomial gaussian_binomial(int a, int b);

// Number of l-dimensional subspaces of F_q^n meeting a fixed m-dimensional
// subspace trivially: q^(m*l) * [n-m choose l]_q.  Zero when l > n - m.
// pre: n >= 0, 0 <= m <= n, l >= 0.
Polynomial count_avoiding_subspaces(int n, int m, int l);

// Number of subspaces U of the ambient space of a fixed flag
// V_1 <= ... <= V_r (dim V_i = dims[i-1]) with dim(U cap V_i) = profile[i-1]
// for every i.  In particular dim U = profile.back().  dims may repeat a
// value (the flag need not be strict).  Returns the zero polynomial for any
// profile that is not realizable (not nondecreasing, profile[i] > dims[i],
// or increments exceeding the flag's).  Throws DimensionMismatchError when
// the two vectors differ in length.
Polynomial count_flag_profile_subspaces(const std::vector<int>& dims,
                                        const std::vector<int>& profile);

}  // namespace unicount
