#include "unicount/polynomial.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "unicount/errors.hpp"

namespace unicount {

Polynomial::Polynomial(std::initializer_list<long> low_to_high) {
  c_.reserve(low_to_high.size());
  for (long v : low_to_high) c_.emplace_back(v);
  normalize();
}

Polynomial::Polynomial(std::vector<Int> low_to_high) : c_(std::move(low_to_high)) {
  normalize();
}

Polynomial Polynomial::constant(Int c) {
  Polynomial p;
  p.c_.push_back(std::move(c));
  p.normalize();
  return p;
}

Polynomial Polynomial::monomial(int degree, Int coeff) {
  if (degree < 0) throw InvalidInputError("monomial: negative degree");
  Polynomial p;
  p.c_.assign(degree + 1, Int(0));
  p.c_[degree] = std::move(coeff);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& Polynomial::coeff(int i) const {
  static const Int kZero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

const Int& Polynomial::leading_coeff() const {
  if (is_zero()) throw InvalidInputError("leading_coeff of zero polynomial");
  return c_.back();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Int& v : r.c_) v = -v;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Int(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Polynomial r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.normalize();
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Int Polynomial::eval(const Int& x) const {
  Int r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

namespace {

std::string render(const Polynomial& p, bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Int& c = p.coeff(i);
    if (c == 0) continue;
    const bool neg = c < 0;
    Int mag = neg ? Int(-c) : c;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (i == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str();
      out << "q";
      if (i > 1) {
        if (latex && i >= 10)
          out << "^{" << i << "}";
        else
          out << "^" << i;
      }
    }
  }
  return out.str();
}

}  // namespace

std::string Polynomial::str() const { return render(*this, false); }
std::string Polynomial::latex() const { return render(*this, true); }

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.str();
}

Polynomial pow(const Polynomial& base, unsigned exp) {
  Polynomial r = Polynomial::one();
  Polynomial b = base;
  while (exp) {
    if (exp & 1) r *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return r;
}

Polynomial exact_div(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw InvalidInputError("exact_div: zero divisor");
  if (dividend.is_zero()) return {};
  if (dividend.degree() < divisor.degree())
    throw NotDivisibleError("exact_div: dividend degree below divisor degree");

  std::vector<Int> rem = dividend.coeffs();
  const int dd = divisor.degree();
  const Int& lead = divisor.coeff(dd);
  const int dq = dividend.degree() - dd;
  std::vector<Int> quot(dq + 1, Int(0));
  for (int k = dq; k >= 0; --k) {
    Int& top = rem[k + dd];
    if (top == 0) continue;
    if (top % lead != 0)
      throw NotDivisibleError("exact_div: leading term not divisible");
    Int qk = top / lead;
    for (int i = 0; i <= dd; ++i) rem[k + i] -= qk * divisor.coeff(i);
    quot[k] = std::move(qk);
  }
  for (const Int& v : rem)
    if (v != 0) throw NotDivisibleError("exact_div: nonzero remainder");
  return Polynomial(std::move(quot));
}

std::vector<Int> qminus1_coeffs(const Polynomial& p) {
  if (p.is_zero()) return {};
  // Repeated synthetic division by (q - 1); remainders are the coefficients.
  std::vector<Int> cur = p.coeffs();
  std::vector<Int> out;
  out.reserve(cur.size());
  while (!cur.empty()) {
    if (cur.size() == 1) {
      out.push_back(std::move(cur[0]));
      break;
    }
    std::vector<Int> quot(cur.size() - 1);
    quot.back() = cur.back();
    for (size_t j = cur.size() - 2; j >= 1; --j) quot[j - 1] = cur[j] + quot[j];
    out.push_back(cur[0] + quot[0]);
    cur = std::move(quot);
  }
  return out;
}

Polynomial from_qminus1_coeffs(const std::vector<Int>& coeffs) {
  Polynomial base{-1, 1};  // q - 1
  Polynomial r;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    r = r * base + Polynomial::constant(*it);
  return r;
}

namespace {

// Minimal exact rational polynomial, internal to interpolation and gcd.
struct RatPoly {
  std::vector<mpq_class> c;

  void normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  static RatPoly from(const Polynomial& p) {
    RatPoly r;
    r.c.reserve(p.coeffs().size());
    for (const Int& v : p.coeffs()) r.c.emplace_back(v);
    return r;
  }

  RatPoly& operator+=(const RatPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), mpq_class(0));
    for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    normalize();
    return *this;
  }

  RatPoly operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    RatPoly r;
    r.c.assign(c.size() + o.c.size() - 1, mpq_class(0));
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.normalize();
    return r;
  }

  void scale(const mpq_class& s) {
    for (auto& v : c) v *= s;
    normalize();
  }

  // in-place remainder of *this by o (o nonzero)
  void mod_by(const RatPoly& o) {
    while (!is_zero() && degree() >= o.degree()) {
      mpq_class f = c.back() / o.c.back();
      int shift = degree() - o.degree();
      for (size_t i = 0; i < o.c.size(); ++i) c[i + shift] -= f * o.c[i];
      c.pop_back();
      normalize();
    }
  }
};

}  // namespace

Polynomial interpolate(const std::vector<std::pair<Int, Int>>& samples,
                       int degree_bound) {
  if (degree_bound < 0) throw InvalidInputError("interpolate: negative degree bound");
  const size_t need = static_cast<size_t>(degree_bound) + 1;
  if (samples.size() < need)
    throw InvalidInputError("interpolate: not enough samples for degree bound");
  {
    std::map<Int, Int> seen;
    for (const auto& [x, y] : samples) {
      auto [it, inserted] = seen.emplace(x, y);
      if (!inserted) throw InvalidInputError("interpolate: repeated sample point");
    }
  }

  // Newton divided differences on the first degree_bound+1 samples.
  std::vector<mpq_class> dd(need);
  for (size_t i = 0; i < need; ++i) dd[i] = mpq_class(samples[i].second);
  for (size_t level = 1; level < need; ++level) {
    for (size_t i = need - 1; i >= level; --i) {
      mpq_class dx(samples[i].first - samples[i - level].first);
      dd[i] = (dd[i] - dd[i - 1]) / dx;
      if (i == level) break;
    }
  }
  RatPoly acc;        // running interpolant
  RatPoly basis;      // prod_{j<i} (q - x_j)
  basis.c = {mpq_class(1)};
  for (size_t i = 0; i < need; ++i) {
    RatPoly term = basis;
    term.scale(dd[i]);
    acc += term;
    RatPoly lin;
    lin.c = {mpq_class(-samples[i].first), mpq_class(1)};
    basis = basis * lin;
  }

  std::vector<Int> coeffs;
  coeffs.reserve(acc.c.size());
  for (auto& v : acc.c) {
    v.canonicalize();
    if (v.get_den() != 1)
      throw NonIntegralError("interpolate: non-integer coefficient " + v.get_str());
    coeffs.push_back(v.get_num());
  }
  Polynomial result(std::move(coeffs));

  for (const auto& [x, y] : samples) {
    if (result.eval(x) != y)
      throw OverdeterminedMismatchError(
          "interpolate: fitted polynomial misses sample at x=" + x.get_str());
  }
  return result;
}

Int content(const Polynomial& p) {
  Int g(0);
  for (const Int& v : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  auto to_primitive = [](const RatPoly& r) {
    if (r.is_zero()) return Polynomial::zero();
    // clear denominators, then divide out the content
    Int den_lcm(1);
    for (const auto& v : r.c)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Int> ints;
    ints.reserve(r.c.size());
    for (const auto& v : r.c) {
      mpq_class scaled = v * mpq_class(den_lcm);
      scaled.canonicalize();
      ints.push_back(scaled.get_num());
    }
    Polynomial p(std::move(ints));
    Int cont = content(p);
    p = exact_div(p, Polynomial::constant(cont));
    if (p.leading_coeff() < 0) p = -p;
    return p;
  };

  if (a.is_zero() && b.is_zero()) return Polynomial::zero();
  RatPoly u = RatPoly::from(a);
  RatPoly v = RatPoly::from(b);
  while (!v.is_zero()) {
    RatPoly r = u;
    r.mod_by(v);
    u = std::move(v);
    v = std::move(r);
    if (!v.is_zero()) v.scale(mpq_class(1) / v.c.back());  // keep coefficients tame
  }
  return to_primitive(u);
}

}  // namespace unicount
