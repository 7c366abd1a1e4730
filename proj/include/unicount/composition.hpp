#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unicount {

enum class GroupKind { GL, PGL, SL };

// Ordered block sizes (a_1, ..., a_r), all >= 1, of a standard parabolic of
// GL_n; n is the sum.  (n) itself is the whole group, (1,...,1) the Borel.
class BlockComposition {
 public:
  BlockComposition() = default;
  explicit BlockComposition(std::vector<int> blocks);
  static BlockComposition borel(int n);  // (1,1,...,1)

  int n() const { return n_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const std::vector<int>& blocks() const { return blocks_; }

  std::string str() const;  // "(1,2,1)"

  bool operator==(const BlockComposition& o) const { return blocks_ == o.blocks_; }

 private:
  std::vector<int> blocks_;
  int n_ = 0;
};

std::ostream& operator<<(std::ostream& os, const BlockComposition& c);

// All 2^(n-1) compositions of n, blocks enumerated first-block-major.
std::vector<BlockComposition> compositions_of(int n);

// Strictly increasing flag dimensions (d_1 < ... < d_r), with d_r the
// ambient dimension.  Empty means the flag in the zero space.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::vector<int> dims);
  static DimVector from_blocks(const BlockComposition& c);  // prefix sums
  static DimVector complete(int n);                         // (1,2,...,n)

  int levels() const { return static_cast<int>(dims_.size()); }
  int dim(int i) const { return dims_[i]; }  // 0-based: dim(0) == d_1
  int ambient() const { return dims_.empty() ? 0 : dims_.back(); }
  const std::vector<int>& dims() const { return dims_; }
  std::vector<int> block_sizes() const;  // successive differences

  // (d_2 - d_1, ..., d_r - d_1): the flag induced on V / V_1.
  DimVector quotient_by_first() const;

  std::string str() const;

  bool operator==(const DimVector& o) const { return dims_ == o.dims_; }

 private:
  std::vector<int> dims_;
};

std::ostream& operator<<(std::ostream& os, const DimVector& d);

}  // namespace unicount
