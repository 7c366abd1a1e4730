#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace unicount {

using Int = mpz_class;

// Dense univariate polynomial in q with arbitrary-precision integer
// coefficients.  coeff(i) is the coefficient of q^i; trailing zeros are
// stripped, so the zero polynomial has empty storage and degree() == -1
// (our stand-in for "minus infinity").
//
// All arithmetic is exact.  Division is only offered as exact_div, which
// throws when the quotient would leave Z[q].
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<long> low_to_high);
  explicit Polynomial(std::vector<Int> low_to_high);

  static Polynomial zero() { return {}; }
  static Polynomial one() { return Polynomial{1}; }
  static Polynomial variable() { return Polynomial{0, 1}; }
  static Polynomial constant(Int c);
  static Polynomial monomial(int degree, Int coeff = Int(1));

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Int& coeff(int i) const;  // 0 outside the stored range
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& leading_coeff() const;  // requires a nonzero polynomial

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  Int eval(const Int& x) const;

  // "q^5 + q^3 - 3q^2 - 2q + 3"; LaTeX braces exponents >= 10 ("q^{14}").
  std::string str() const;
  std::string latex() const;

 private:
  std::vector<Int> c_;
  void normalize();
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

Polynomial pow(const Polynomial& base, unsigned exp);

// Throws NotDivisibleError unless divisor * result == dividend exactly.
Polynomial exact_div(const Polynomial& dividend, const Polynomial& divisor);

// Coefficients (c_0, ..., c_d) with p = sum c_i (q-1)^i.  Exact; the change
// of basis is unimodular over Z.  Used to certify positivity in q-1.
std::vector<Int> qminus1_coeffs(const Polynomial& p);
Polynomial from_qminus1_coeffs(const std::vector<Int>& coeffs);

// Lagrange/Newton interpolation through (x, y) samples, exact over the
// rationals internally.  Uses the first degree_bound+1 samples to build the
// polynomial and then checks it against every sample.  Throws
// InvalidInputError (too few samples or repeated x), NonIntegralError, or
// OverdeterminedMismatchError.
Polynomial interpolate(const std::vector<std::pair<Int, Int>>& samples,
                       int degree_bound);

// gcd of the coefficients (nonnegative; 0 for the zero polynomial).
Int content(const Polynomial& p);

// Primitive gcd with positive leading coefficient; gcd(0, 0) == 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace unicount
