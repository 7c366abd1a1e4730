#include "unicount/ff/matrix.hpp"

#include <ostream>
#include <sstream>

#include "unicount/errors.hpp"

namespace unicount::ff {

Matrix::Matrix(int rows, int cols, PrimeField f)
    : rows_(rows), cols_(cols), f_(f), a_(static_cast<size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw InvalidInputError("Matrix: negative shape");
}

Matrix Matrix::identity(int n, PrimeField f) {
  Matrix m(n, n, f);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || !(f_ == o.f_))
    throw DimensionMismatchError("Matrix multiply: incompatible shapes");
  Matrix r(rows_, o.cols_, f_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      int v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        int cur = r.at(i, j) + v * o.at(k, j);
        r.set(i, j, cur % f_.p());
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(f_ == o.f_))
    throw DimensionMismatchError("Matrix add: incompatible shapes");
  Matrix r(rows_, cols_, f_);
  for (size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = static_cast<std::uint8_t>(f_.add(a_[i], o.a_[i]));
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(f_ == o.f_))
    throw DimensionMismatchError("Matrix subtract: incompatible shapes");
  Matrix r(rows_, cols_, f_);
  for (size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = static_cast<std::uint8_t>(f_.sub(a_[i], o.a_[i]));
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && f_ == o.f_ && a_ == o.a_;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, f_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

std::uint64_t Matrix::key() const {
  if (a_.size() > 16)
    throw InvalidInputError("Matrix::key: matrix too large to pack");
  std::uint64_t k = 0;
  for (size_t i = 0; i < a_.size(); ++i)
    k |= static_cast<std::uint64_t>(a_[i]) << (4 * i);
  return k;
}

std::string Matrix::str() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < rows_; ++i) {
    if (i) out << ',';
    out << '[';
    for (int j = 0; j < cols_; ++j) {
      if (j) out << ',';
      out << at(i, j);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  return os << m.str();
}

RrefResult rref(const Matrix& in) {
  RrefResult res{in, 0, {}};
  Matrix& m = res.mat;
  const PrimeField& f = m.field();
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < m.cols(); ++j) {
        int t = m.at(r, j);
        m.set(r, j, m.at(pivot, j));
        m.set(pivot, j, t);
      }
    const int scale = f.inv(m.at(r, col));
    for (int j = col; j < m.cols(); ++j) m.set(r, j, f.mul(m.at(r, j), scale));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const int factor = m.at(i, col);
      if (factor == 0) continue;
      for (int j = col; j < m.cols(); ++j)
        m.set(i, j, f.sub(m.at(i, j), f.mul(factor, m.at(r, j))));
    }
    res.pivot_cols.push_back(col);
    ++r;
  }
  res.rank = r;
  return res;
}

int rank(const Matrix& m) { return rref(m).rank; }

int det(const Matrix& in) {
  if (in.rows() != in.cols()) throw DimensionMismatchError("det: not square");
  Matrix m = in;
  const PrimeField& f = m.field();
  const int n = m.rows();
  int d = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        int t = m.at(col, j);
        m.set(col, j, m.at(pivot, j));
        m.set(pivot, j, t);
      }
      d = f.neg(d);
    }
    d = f.mul(d, m.at(col, col));
    const int scale = f.inv(m.at(col, col));
    for (int i = col + 1; i < n; ++i) {
      const int factor = f.mul(m.at(i, col), scale);
      if (factor == 0) continue;
      for (int j = col; j < n; ++j)
        m.set(i, j, f.sub(m.at(i, j), f.mul(factor, m.at(col, j))));
    }
  }
  return d;
}

Matrix inverse(const Matrix& in) {
  if (in.rows() != in.cols()) throw DimensionMismatchError("inverse: not square");
  const int n = in.rows();
  const PrimeField& f = in.field();
  // Gauss-Jordan on [in | I]
  Matrix aug(n, 2 * n, f);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.set(i, j, in.at(i, j));
    aug.set(i, n + i, 1);
  }
  RrefResult r = rref(aug);
  for (int i = 0; i < n; ++i)
    if (r.mat.at(i, i) != 1) throw InvalidInputError("inverse: singular matrix");
  Matrix out(n, n, f);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.set(i, j, r.mat.at(i, n + j));
  return out;
}

Matrix row_space_basis(const Matrix& m) {
  RrefResult r = rref(m);
  Matrix out(r.rank, m.cols(), m.field());
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < m.cols(); ++j) out.set(i, j, r.mat.at(i, j));
  return out;
}

Matrix kernel_basis(const Matrix& m) {
  const int n = m.cols();
  const PrimeField& f = m.field();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  Matrix out(n - r.rank, n, f);
  int row = 0;
  for (int fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    out.set(row, fc, 1);
    for (int i = 0; i < r.rank; ++i)
      out.set(row, r.pivot_cols[i], f.neg(r.mat.at(i, fc)));
    ++row;
  }
  return out;
}

Matrix act_rows(const Matrix& basis, const Matrix& y) {
  return basis * y.transpose();
}

std::vector<std::uint8_t> reduce_row(const RrefResult& r,
                                     std::vector<std::uint8_t> v) {
  const PrimeField& f = r.mat.field();
  for (int i = 0; i < r.rank; ++i) {
    const int c = r.pivot_cols[i];
    const int factor = v[c];
    if (factor == 0) continue;
    for (int j = 0; j < r.mat.cols(); ++j)
      v[j] = static_cast<std::uint8_t>(f.sub(v[j], f.mul(factor, r.mat.at(i, j))));
  }
  return v;
}

bool in_row_space(const RrefResult& r, const std::vector<std::uint8_t>& v) {
  std::vector<std::uint8_t> res = reduce_row(r, v);
  for (std::uint8_t x : res)
    if (x != 0) return false;
  return true;
}

Matrix preimage_rows(const Matrix& y, const Matrix& w) {
  return kernel_basis(kernel_basis(w) * y);
}

Partition nilpotent_jordan_type(const Matrix& m) {
  if (m.rows() != m.cols())
    throw DimensionMismatchError("nilpotent_jordan_type: not square");
  const int n = m.rows();
  if (n == 0) return Partition();
  std::vector<int> ranks{n};  // rank of m^j
  Matrix p = m;
  for (int j = 1; j <= n; ++j) {
    ranks.push_back(rank(p));
    if (ranks.back() == 0) break;
    p = p * m;
  }
  if (ranks.back() != 0) throw NotNilpotentError("matrix is not nilpotent");
  // number of parts > j is ranks[j] - ranks[j+1]
  std::vector<int> mult;  // mult[k] = parts of size k+1
  for (size_t j = 1; j < ranks.size(); ++j) {
    const int ge_j = ranks[j - 1] - ranks[j];
    const int ge_j1 = (j < ranks.size() - 1) ? ranks[j] - ranks[j + 1] : 0;
    mult.push_back(ge_j - ge_j1);
  }
  return Partition::from_multiplicities(mult);
}

Matrix jordan_nilpotent(const Partition& pi, PrimeField f) {
  const int n = pi.n();
  Matrix m(n, n, f);
  int off = 0;
  for (int part : pi.parts()) {
    for (int i = 1; i < part; ++i) m.set(off + i - 1, off + i, 1);
    off += part;
  }
  return m;
}

Matrix jordan_unipotent(const Partition& pi, PrimeField f) {
  return Matrix::identity(pi.n(), f) + jordan_nilpotent(pi, f);
}

}  // namespace unicount::ff
