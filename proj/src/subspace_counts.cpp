#include "unicount/subspace_counts.hpp"

#include "unicount/errors.hpp"

namespace unicount {

Polynomial gaussian_binomial(int a, int b) {
  if (b < 0 || b > a) return Polynomial::zero();
  if (b == 0 || b == a) return Polynomial::one();
  // Pascal recurrence [a b] = [a-1 b-1] + q^b [a-1 b]; integral throughout.
  // row[j] holds [i choose j] for the current i.
  std::vector<Polynomial> row(static_cast<size_t>(b) + 1);
  row[0] = Polynomial::one();
  for (int i = 1; i <= a; ++i) {
    for (int j = std::min(i, b); j >= 1; --j) {
      Polynomial t = row[j - 1];
      if (j <= i - 1) t += Polynomial::monomial(j) * row[j];
      row[j] = std::move(t);
    }
  }
  return row[b];
}

Polynomial count_avoiding_subspaces(int n, int m, int l) {
  if (n < 0 || m < 0 || m > n || l < 0)
    throw InvalidInputError("count_avoiding_subspaces: bad dimensions");
  if (l > n - m) return Polynomial::zero();
  return Polynomial::monomial(m * l) * gaussian_binomial(n - m, l);
}

Polynomial count_flag_profile_subspaces(const std::vector<int>& dims,
                                        const std::vector<int>& profile) {
  if (dims.size() != profile.size())
    throw DimensionMismatchError("count_flag_profile_subspaces: length mismatch");
  int prev = 0;
  for (int d : dims) {
    if (d < prev || d < 0)
      throw InvalidInputError("count_flag_profile_subspaces: dims must be nondecreasing");
    prev = d;
  }
  // realizability of the intersection profile
  int e_prev = 0, d_prev = 0;
  for (size_t i = 0; i < dims.size(); ++i) {
    int e = profile[i], d = dims[i];
    if (e < e_prev) return Polynomial::zero();           // profile decreases
    if (e > d) return Polynomial::zero();                // exceeds the flag
    if (e - e_prev > d - d_prev) return Polynomial::zero();  // increment too big
    e_prev = e;
    d_prev = d;
  }

  // Peel off the top level: choose U cap V_{r-1} first, then count the
  // extensions to U inside V_r that avoid V_{r-1} modulo the chosen part.
  Polynomial result = Polynomial::one();
  for (size_t r = dims.size(); r-- > 0;) {
    int below_e = (r == 0) ? 0 : profile[r - 1];
    int below_d = (r == 0) ? 0 : dims[r - 1];
    result *= count_avoiding_subspaces(dims[r] - below_e, below_d - below_e,
                                       profile[r] - below_e);
  }
  return result;
}

}  // namespace unicount
