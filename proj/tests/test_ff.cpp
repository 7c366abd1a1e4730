#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "unicount/errors.hpp"
#include "unicount/ff/oracle.hpp"
#include "unicount/ff/subspaces.hpp"
#include "unicount/flag_counts.hpp"
#include "unicount/group_orders.hpp"
#include "unicount/subspace_counts.hpp"

using namespace unicount;
using namespace unicount::ff;

TEST_CASE("prime field arithmetic") {
  for (int p : {2, 3, 5, 7, 11, 13}) {
    CHECK(is_supported_prime(p));
    const PrimeField f(p);
    for (int x = 1; x < p; ++x) {
      CHECK_EQ(f.mul(x, f.inv(x)), 1);
      CHECK_EQ(f.add(x, f.neg(x)), 0);
    }
    CHECK_EQ(f.sub(0, 1), p - 1);
  }
  CHECK_FALSE(is_supported_prime(4));
  CHECK_FALSE(is_supported_prime(9));
  CHECK_FALSE(is_supported_prime(1));
  CHECK_THROWS_AS(PrimeField(6), InvalidInputError);
  CHECK_THROWS_AS(PrimeField(2).inv(0), InvalidInputError);
}

TEST_CASE("matrix arithmetic and decompositions") {
  const PrimeField f(5);
  SUBCASE("multiplication against a hand example") {
    Matrix a(2, 2, f), b(2, 2, f);
    a.set(0, 0, 1); a.set(0, 1, 2); a.set(1, 0, 3); a.set(1, 1, 4);
    b.set(0, 0, 2); b.set(0, 1, 0); b.set(1, 0, 1); b.set(1, 1, 3);
    const Matrix c = a * b;
    CHECK_EQ(c.at(0, 0), 4);  // 1*2 + 2*1
    CHECK_EQ(c.at(0, 1), 1);  // 2*3 = 6 = 1
    CHECK_EQ(c.at(1, 0), 0);  // 3*2 + 4*1 = 10 = 0
    CHECK_EQ(c.at(1, 1), 2);  // 4*3 = 12 = 2
  }
  SUBCASE("determinant, rank, inverse") {
    CHECK_EQ(det(Matrix::identity(3, f)), 1);
    Matrix singular(2, 2, f);
    singular.set(0, 0, 1); singular.set(0, 1, 2);
    singular.set(1, 0, 2); singular.set(1, 1, 4);
    CHECK_EQ(det(singular), 0);
    CHECK_EQ(rank(singular), 1);
    CHECK_THROWS_AS(inverse(singular), InvalidInputError);

    std::mt19937 gen(99);
    std::uniform_int_distribution<int> entry(0, 4);
    for (int trial = 0; trial < 10; ++trial) {
      Matrix m(3, 3, f);
      do {
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) m.set(i, j, entry(gen));
      } while (det(m) == 0);
      CHECK_EQ(m * inverse(m), Matrix::identity(3, f));
      CHECK_EQ(inverse(m) * m, Matrix::identity(3, f));
    }
  }
  SUBCASE("shape mismatches throw") {
    CHECK_THROWS_AS(Matrix(2, 2, f) * Matrix(3, 3, f), DimensionMismatchError);
    CHECK_THROWS_AS(Matrix(2, 2, f) + Matrix(2, 3, f), DimensionMismatchError);
    CHECK_THROWS_AS(det(Matrix(2, 3, f)), DimensionMismatchError);
  }
}

TEST_CASE("row-space machinery") {
  const PrimeField f(2);
  const Matrix y = jordan_nilpotent(Partition({2, 1}), f);
  SUBCASE("kernel of the standard nilpotent") {
    const Matrix k = kernel_basis(y);
    CHECK_EQ(k.rows(), 2);
    // every kernel row is annihilated
    const Matrix img = act_rows(k, y);
    for (int i = 0; i < img.rows(); ++i)
      for (int j = 0; j < img.cols(); ++j) CHECK_EQ(img.at(i, j), 0);
  }
  SUBCASE("kernel of an empty constraint is everything") {
    CHECK_EQ(kernel_basis(Matrix(0, 3, f)), Matrix::identity(3, f));
  }
  SUBCASE("rows act through the transpose") {
    // y e2 = e1 for a single Jordan block
    const Matrix y2 = jordan_nilpotent(Partition({2}), f);
    Matrix e2(1, 2, f);
    e2.set(0, 1, 1);
    const Matrix img = act_rows(e2, y2);
    CHECK_EQ(img.at(0, 0), 1);
    CHECK_EQ(img.at(0, 1), 0);
  }
  SUBCASE("preimage of the zero space is the kernel") {
    CHECK_EQ(preimage_rows(y, Matrix(0, 3, f)), kernel_basis(y));
  }
  SUBCASE("preimage of the full space is the full space") {
    CHECK_EQ(preimage_rows(y, Matrix::identity(3, f)).rows(), 3);
  }
  SUBCASE("membership after reduction") {
    // the only nonzero row of y is (0,1,0), so that spans the row space
    const RrefResult r = rref(y);
    CHECK(in_row_space(r, {0, 1, 0}));
    CHECK_FALSE(in_row_space(r, {1, 0, 0}));
  }
}

TEST_CASE("jordan types") {
  const PrimeField f(3);
  SUBCASE("round trip through the standard witnesses") {
    for (int n = 1; n <= 5; ++n)
      for (const Partition& pi : partitions_of(n)) {
        CHECK_EQ(nilpotent_jordan_type(jordan_nilpotent(pi, f)), pi);
        const Matrix u = jordan_unipotent(pi, f);
        CHECK_EQ(nilpotent_jordan_type(u - Matrix::identity(n, f)), pi);
      }
  }
  SUBCASE("zero matrix is the identity type") {
    CHECK_EQ(nilpotent_jordan_type(Matrix(3, 3, f)), Partition({1, 1, 1}));
  }
  SUBCASE("non-nilpotent input throws") {
    CHECK_THROWS_AS(nilpotent_jordan_type(Matrix::identity(2, f)),
                    NotNilpotentError);
  }
  SUBCASE("conjugation invariance with a fixed seed") {
    std::mt19937 gen(4242);
    std::uniform_int_distribution<int> entry(0, 2);
    for (const Partition& pi : partitions_of(4)) {
      const Matrix y = jordan_nilpotent(pi, f);
      for (int trial = 0; trial < 5; ++trial) {
        Matrix g(4, 4, f);
        do {
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) g.set(i, j, entry(gen));
        } while (det(g) == 0);
        CHECK_EQ(nilpotent_jordan_type(g * y * inverse(g)), pi);
      }
    }
  }
}

TEST_CASE("subspace enumeration") {
  SUBCASE("counts match the gaussian binomials") {
    for (int p : {2, 3})
      for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
          const SubspaceEnumerator subs(n, k, PrimeField(p));
          CHECK_EQ(Int(static_cast<unsigned long>(subs.count())),
                   gaussian_binomial(n, k).eval(Int(p)));
        }
  }
  SUBCASE("every subspace appears exactly once, in reduced form") {
    const PrimeField f(3);
    const SubspaceEnumerator subs(4, 2, f);
    std::set<std::string> seen;
    for (std::uint64_t i = 0; i < subs.count(); ++i) {
      const Matrix s = subs.subspace(i);
      CHECK_EQ(s.rows(), 2);
      CHECK_EQ(rank(s), 2);
      CHECK_EQ(row_space_basis(s), s);  // already in canonical form
      seen.insert(s.str());
    }
    CHECK_EQ(seen.size(), subs.count());
  }
  SUBCASE("bad arguments throw") {
    CHECK_THROWS_AS(SubspaceEnumerator(2, 3, PrimeField(2)), InvalidInputError);
    CHECK_THROWS_AS(SubspaceEnumerator(2, -1, PrimeField(2)), InvalidInputError);
    CHECK_THROWS_AS(SubspaceEnumerator(2, 1, PrimeField(2)).subspace(3),
                    InvalidInputError);
  }
}

TEST_CASE("flag-counting oracles") {
  SUBCASE("identity fixes every flag") {
    const PrimeField f(2);
    const Matrix id = Matrix::identity(3, f);
    CHECK_EQ(count_radical_flags(id, DimVector::complete(3)), 21);
    CHECK_EQ(count_stable_flags(id, DimVector::complete(3)), 21);
  }
  SUBCASE("identity in dimension 2") {
    const PrimeField f(2);
    CHECK_EQ(count_stable_flags(Matrix::identity(2, f), DimVector({1, 2})), 3);
  }
  SUBCASE("regular unipotent fixes exactly the standard flag") {
    for (int p : {2, 3, 5}) {
      const PrimeField f(p);
      const Matrix u = jordan_unipotent(Partition({3}), f);
      CHECK_EQ(count_radical_flags(u, DimVector::complete(3)), 1);
      CHECK_EQ(count_stable_flags(u, DimVector::complete(3)), 1);
    }
  }
  SUBCASE("radical flags are stable flags for complete flags") {
    const PrimeField f(3);
    for (const Partition& pi : partitions_of(4)) {
      const Matrix u = jordan_unipotent(pi, f);
      CHECK_EQ(count_radical_flags(u, DimVector::complete(4)),
               count_stable_flags(u, DimVector::complete(4)));
    }
  }
  SUBCASE("partial flags: stability is weaker than the radical condition") {
    const PrimeField f(3);
    const Matrix u = jordan_unipotent(Partition({2, 2}), f);
    const DimVector d({2, 4});
    CHECK(count_stable_flags(u, d) > count_radical_flags(u, d));
  }
  SUBCASE("non-unipotent input throws") {
    const PrimeField f(3);
    Matrix m(2, 2, f);
    m.set(0, 0, 2);
    m.set(1, 1, 1);
    CHECK_THROWS_AS(count_radical_flags(m, DimVector({1, 2})),
                    NotNilpotentError);
  }
  SUBCASE("ambient dimension mismatch throws") {
    const PrimeField f(2);
    CHECK_THROWS_AS(
        count_radical_flags(Matrix::identity(3, f), DimVector({1, 2})),
        DimensionMismatchError);
  }
  SUBCASE("budget refusal is deterministic") {
    const PrimeField f(5);
    OracleLimits tiny;
    tiny.element_budget = 10;
    CHECK_THROWS_AS(count_radical_flags(Matrix::identity(4, f),
                                        DimVector::complete(4), Exec::Serial,
                                        tiny),
                    ResourceLimitError);
  }
}

TEST_CASE("quotient type tallies") {
  SUBCASE("type (2,1), one-dimensional subspaces over F_2") {
    const PrimeField f(2);
    const auto tally = quotient_type_tally(jordan_unipotent(Partition({2, 1}), f), 1);
    REQUIRE_EQ(tally.size(), 2);
    CHECK_EQ(tally.at(Partition({2})), 2);
    CHECK_EQ(tally.at(Partition({1, 1})), 1);
  }
  SUBCASE("codimension zero keeps the type") {
    const PrimeField f(3);
    const auto tally = quotient_type_tally(jordan_unipotent(Partition({2, 2}), f), 0);
    REQUIRE_EQ(tally.size(), 1);
    CHECK_EQ(tally.at(Partition({2, 2})), 1);
  }
  SUBCASE("identity type over F_3") {
    const PrimeField f(3);
    const auto tally = quotient_type_tally(jordan_unipotent(Partition({1, 1}), f), 1);
    REQUIRE_EQ(tally.size(), 1);
    CHECK_EQ(tally.at(Partition({1})), 4);
  }
  SUBCASE("codimension beyond the kernel is empty") {
    const PrimeField f(2);
    CHECK(quotient_type_tally(jordan_unipotent(Partition({3}), f), 2).empty());
  }
}

TEST_CASE("centralizer orders") {
  SUBCASE("identity short-circuits to the group order") {
    CHECK_EQ(centralizer_order(Matrix::identity(2, PrimeField(2)), GroupKind::GL),
             6);
    CHECK_EQ(centralizer_order(Matrix::identity(3, PrimeField(3)), GroupKind::GL),
             11232);
    CHECK_EQ(centralizer_order(Matrix::identity(2, PrimeField(3)), GroupKind::SL),
             24);
  }
  SUBCASE("regular unipotent centralizers") {
    CHECK_EQ(centralizer_order(jordan_unipotent(Partition({2}), PrimeField(3)),
                               GroupKind::GL),
             6);  // q(q-1) at q=3
    CHECK_EQ(centralizer_order(jordan_unipotent(Partition({3}), PrimeField(2)),
                               GroupKind::SL),
             4);
  }
  SUBCASE("subregular centralizer in GL_3") {
    // |C_GL(u)| for type (2,1) is q^3 (q-1)^2; cross-check: the class size
    // 11232 / 108 = 104 equals the number of rank-one square-zero matrices.
    CHECK_EQ(centralizer_order(jordan_unipotent(Partition({2, 1}), PrimeField(3)),
                               GroupKind::GL),
             108);
  }
  SUBCASE("input validation") {
    const PrimeField f(3);
    CHECK_THROWS_AS(centralizer_order(Matrix(3, 3, f), GroupKind::GL),
                    InvalidInputError);  // singular
    CHECK_THROWS_AS(
        centralizer_order(Matrix::identity(2, f), GroupKind::PGL),
        InvalidInputError);
  }
}

TEST_CASE("class-count oracle") {
  SUBCASE("Borel radical of GL_2 over F_3") {
    CHECK_EQ(count_classes(BlockComposition::borel(2), PrimeField(3),
                           GroupKind::GL),
             20);
  }
  SUBCASE("Borel radical of SL_3 over F_2") {
    CHECK_EQ(count_classes(BlockComposition::borel(3), PrimeField(2),
                           GroupKind::SL),
             27);
  }
  SUBCASE("trivial radical counts group elements") {
    CHECK_EQ(count_classes(BlockComposition({2}), PrimeField(3), GroupKind::GL),
             48);
  }
  SUBCASE("GL and PGL agree over F_2") {
    CHECK_EQ(count_classes(BlockComposition::borel(3), PrimeField(2),
                           GroupKind::GL),
             count_classes(BlockComposition::borel(3), PrimeField(2),
                           GroupKind::PGL));
  }
  SUBCASE("budget refusal") {
    OracleLimits tiny;
    tiny.element_budget = 3;
    CHECK_THROWS_AS(count_classes(BlockComposition::borel(3), PrimeField(5),
                                  GroupKind::GL, Exec::Serial, tiny),
                    ResourceLimitError);
  }
}

TEST_CASE("radical element enumeration") {
  const RadicalEnumerator rad(BlockComposition::borel(3), PrimeField(2));
  CHECK_EQ(rad.count(), 8);
  std::set<std::string> seen;
  for (std::uint64_t i = 0; i < rad.count(); ++i) {
    const Matrix m = rad.element(i);
    // unitriangular with free strictly-upper entries
    for (int r = 0; r < 3; ++r) {
      CHECK_EQ(m.at(r, r), 1);
      for (int c = 0; c < r; ++c) CHECK_EQ(m.at(r, c), 0);
    }
    seen.insert(m.str());
  }
  CHECK_EQ(seen.size(), 8);
  CHECK_THROWS_AS(rad.element(8), InvalidInputError);
  SUBCASE("block shape constrains the free cells") {
    const RadicalEnumerator block(BlockComposition({2, 1}), PrimeField(3));
    CHECK_EQ(block.count(), 9);  // p^2
  }
}

TEST_CASE("subgroup-counting identity checker") {
  SUBCASE("GL_2(F_2): four orbits") {
    const FormulaCheck r =
        check_class_count_formula(BlockComposition::borel(2), PrimeField(2));
    CHECK(r.equal);
    CHECK_EQ(r.orbit_count, 4);
    CHECK_EQ(r.formula_value, 4);
    CHECK_EQ(r.normalizer_order, 2);      // the Borel subgroup itself
    CHECK_EQ(r.subgroup_conjugates, 3);   // index of the normalizer
  }
  SUBCASE("GL_2(F_3): both sides twenty") {
    const FormulaCheck r =
        check_class_count_formula(BlockComposition::borel(2), PrimeField(3));
    CHECK(r.equal);
    CHECK_EQ(r.orbit_count, 20);
    CHECK_EQ(r.formula_value, 20);
  }
  SUBCASE("trivial subgroup: every element is its own class") {
    const FormulaCheck r =
        check_class_count_formula(BlockComposition({2}), PrimeField(2));
    CHECK(r.equal);
    CHECK_EQ(r.orbit_count, 6);  // |GL_2(F_2)|
  }
  SUBCASE("budget refusal") {
    OracleLimits tiny;
    tiny.element_budget = 100;
    CHECK_THROWS_AS(check_class_count_formula(BlockComposition::borel(2),
                                              PrimeField(3), tiny),
                    ResourceLimitError);
  }
}

TEST_CASE("stable-flag interpolation") {
  const std::vector<int> primes = {2, 3, 5, 7, 11};
  SUBCASE("recovers the flag-count polynomial on complete flags") {
    for (const Partition& pi : partitions_of(3))
      CHECK_EQ(interpolate_stable_flag_poly(pi, DimVector::complete(3), primes),
               flag_count_poly(pi, DimVector::complete(3)));
  }
  SUBCASE("regular type fixes a unique line") {
    CHECK_EQ(interpolate_stable_flag_poly(Partition({4}), DimVector({1, 4}),
                                          primes),
             Polynomial::one());
  }
  SUBCASE("constant term of every interpolant is one") {
    for (const Partition& pi : partitions_of(3)) {
      const Polynomial g =
          interpolate_stable_flag_poly(pi, DimVector({1, 3}), primes);
      CHECK_EQ(g.coeff(0), 1);
    }
  }
  SUBCASE("too few primes throw") {
    CHECK_THROWS_AS(interpolate_stable_flag_poly(
                        Partition({1, 1, 1}), DimVector::complete(3), {2, 3}),
                    InvalidInputError);
  }
  SUBCASE("unsupported primes throw") {
    CHECK_THROWS_AS(
        interpolate_stable_flag_poly(Partition({1, 1}), DimVector::complete(2),
                                     {2, 4}),
        InvalidInputError);
  }
}
