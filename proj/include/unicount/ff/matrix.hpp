#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "unicount/ff/field.hpp"
#include "unicount/partitions.hpp"

namespace unicount::ff {

// Dense matrix over a small prime field.  Rows of a matrix double as the
// coordinate tuples of subspace basis vectors; a linear map y acts on such a
// row v as v * y^T (see act_rows), which matches y acting on column vectors.
class Matrix {
 public:
  Matrix(int rows, int cols, PrimeField f);
  static Matrix identity(int n, PrimeField f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const PrimeField& field() const { return f_; }

  int at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  void set(int i, int j, int v) { a_[static_cast<size_t>(i) * cols_ + j] = v; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const;

  Matrix transpose() const;

  // packs the entries 4 bits each; requires rows*cols <= 16 (enough for the
  // exhaustive group enumerations, which stop at n = 4)
  std::uint64_t key() const;

  std::string str() const;  // "[[1,0],[1,1]]"

 private:
  int rows_, cols_;
  PrimeField f_;
  std::vector<std::uint8_t> a_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

struct RrefResult {
  Matrix mat;
  int rank;
  std::vector<int> pivot_cols;
};

RrefResult rref(const Matrix& m);
int rank(const Matrix& m);
int det(const Matrix& m);                 // square
Matrix inverse(const Matrix& m);          // square, invertible
Matrix row_space_basis(const Matrix& m);  // rref rows, zero rows dropped

// Rows spanning {x : m x^T = 0}, in the canonical rref-derived order.  A
// 0 x n input yields the full space (the identity basis).
Matrix kernel_basis(const Matrix& m);

// Apply the endomorphism y to every row of basis: returns basis * y^T.
Matrix act_rows(const Matrix& basis, const Matrix& y);

// Reduce v against the rows of an rref matrix; zero result means membership.
std::vector<std::uint8_t> reduce_row(const RrefResult& r, std::vector<std::uint8_t> v);
bool in_row_space(const RrefResult& r, const std::vector<std::uint8_t>& v);

// {x : y x^T in the row space of w} as a basis-rows matrix.
Matrix preimage_rows(const Matrix& y, const Matrix& w);

// Jordan type of a nilpotent matrix from its rank sequence; throws
// NotNilpotentError if m^n != 0.
Partition nilpotent_jordan_type(const Matrix& m);

// Standard witnesses of a Jordan type: the nilpotent y_pi with superdiagonal
// blocks, and the unipotent 1 + y_pi.
Matrix jordan_nilpotent(const Partition& pi, PrimeField f);
Matrix jordan_unipotent(const Partition& pi, PrimeField f);

}  // namespace unicount::ff
