#include "unicount/group_orders.hpp"

#include <numeric>
#include <sstream>

#include "unicount/errors.hpp"
#include "unicount/json_io.hpp"

namespace unicount {

Polynomial gl_order(int k) {
  if (k < 0) throw InvalidInputError("gl_order: negative dimension");
  Polynomial r = Polynomial::one();
  for (int i = 0; i < k; ++i)
    r *= Polynomial::monomial(k) - Polynomial::monomial(i);
  return r;
}

Polynomial levi_order(const BlockComposition& c, GroupKind kind) {
  Polynomial r = Polynomial::one();
  for (int b : c.blocks()) r *= gl_order(b);
  switch (kind) {
    case GroupKind::GL:
      return r;
    case GroupKind::PGL:
      return exact_div(r, Polynomial{-1, 1});
    case GroupKind::SL:
      break;
  }
  throw InvalidInputError("levi_order: flavor must be GL or PGL");
}

int radical_exponent(const BlockComposition& c) {
  int sq = 0;
  for (int b : c.blocks()) sq += b * b;
  return (c.n() * c.n() - sq) / 2;
}

Polynomial class_count_poly(int n, const BlockComposition& c, GroupKind kind) {
  if (n != c.n())
    throw InvalidInputError("class_count_poly: n does not match the blocks");
  if (kind == GroupKind::SL)
    throw InvalidInputError("class_count_poly: flavor must be GL or PGL");
  const DimVector d = DimVector::from_blocks(c);
  FlagCountCache cache;
  Polynomial sum;
  for (const Partition& pi : partitions_of(n))
    sum += flag_count_poly(pi, d, cache);
  return levi_order(c, kind) * sum;
}

Polynomial sl3_borel_class_count(Sl3Congruence congruence) {
  // |torus of SL_3| = (q-1)^2; the mu-fold regular class contributes
  // mu * f((3)), the others once each.
  const DimVector d = DimVector::complete(3);
  FlagCountCache cache;
  const int mu = (congruence == Sl3Congruence::OneMod3) ? 3 : 1;
  Polynomial sum = Polynomial::constant(mu) *
                   flag_count_poly(Partition({3}), d, cache);
  sum += flag_count_poly(Partition({2, 1}), d, cache);
  sum += flag_count_poly(Partition({1, 1, 1}), d, cache);
  return pow(Polynomial{-1, 1}, 2) * sum;
}

Polynomial commuting_pairs_poly(int n, const BlockComposition& c, GroupKind kind) {
  return Polynomial::monomial(radical_exponent(c)) * class_count_poly(n, c, kind);
}

PolyFraction fixed_point_ratio(const Partition& pi, const BlockComposition& c) {
  if (pi.n() != c.n())
    throw InvalidInputError("fixed_point_ratio: |pi| != n");
  const DimVector d = DimVector::from_blocks(c);
  Polynomial num = levi_order(c, GroupKind::GL) *
                   Polynomial::monomial(radical_exponent(c)) *
                   flag_count_poly(pi, d);
  Polynomial den = gl_order(c.n());
  if (num.is_zero()) return {Polynomial::zero(), Polynomial::one()};

  // strip the shared integer content, then the shared polynomial factor
  Int cg;
  mpz_gcd(cg.get_mpz_t(), content(num).get_mpz_t(), content(den).get_mpz_t());
  num = exact_div(num, Polynomial::constant(cg));
  den = exact_div(den, Polynomial::constant(cg));
  Polynomial g = poly_gcd(num, den);
  if (g.degree() > 0 || g.leading_coeff() != 1) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  if (den.leading_coeff() < 0) {
    num = -num;
    den = -den;
  }
  return {std::move(num), std::move(den)};
}

std::string render_polynomial(const Polynomial& p, OutputFormat format) {
  switch (format) {
    case OutputFormat::Text:
      return p.str();
    case OutputFormat::Latex:
      return p.latex();
    case OutputFormat::Json:
      return poly_to_json(p).dump();
  }
  throw InvalidInputError("render_polynomial: unknown format");
}

std::string render_class_count_table(int max_n, OutputFormat format) {
  if (max_n < 2 || max_n > 10)
    throw InvalidInputError("render_class_count_table: max_n must be in [2,10]");
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Text:
      for (int n = 2; n <= max_n; ++n)
        out << "n=" << n << ": "
            << class_count_poly(n, BlockComposition::borel(n), GroupKind::PGL).str()
            << "\n";
      break;
    case OutputFormat::Json: {
      nlohmann::json rows = nlohmann::json::array();
      for (int n = 2; n <= max_n; ++n) {
        nlohmann::json row = poly_to_json(
            class_count_poly(n, BlockComposition::borel(n), GroupKind::PGL));
        row["n"] = n;
        rows.push_back(std::move(row));
      }
      out << rows.dump() << "\n";
      break;
    }
    case OutputFormat::Latex:
      out << "\\begin{tabular}{rl}\n"
          << "$n$ & $k(\\mathrm{U}_n(q),\\,\\mathrm{PGL}_n(q))$ \\\\\n"
          << "\\hline\n";
      for (int n = 2; n <= max_n; ++n)
        out << n << " & $"
            << class_count_poly(n, BlockComposition::borel(n), GroupKind::PGL).latex()
            << "$ \\\\\n";
      out << "\\end{tabular}\n";
      break;
  }
  return out.str();
}

}  // namespace unicount
