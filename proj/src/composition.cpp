#include "unicount/composition.hpp"

#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

#include "unicount/errors.hpp"

namespace unicount {

BlockComposition::BlockComposition(std::vector<int> blocks)
    : blocks_(std::move(blocks)) {
  for (int b : blocks_)
    if (b <= 0) throw InvalidInputError("block sizes must be positive");
  n_ = std::accumulate(blocks_.begin(), blocks_.end(), 0);
}

BlockComposition BlockComposition::borel(int n) {
  if (n < 0) throw InvalidInputError("borel: negative n");
  return BlockComposition(std::vector<int>(n, 1));
}

std::string BlockComposition::str() const {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out << ',';
    out << blocks_[i];
  }
  out << ')';
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const BlockComposition& c) {
  return os << c.str();
}

std::vector<BlockComposition> compositions_of(int n) {
  if (n < 0) throw InvalidInputError("compositions_of: negative n");
  std::vector<BlockComposition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      out.emplace_back(BlockComposition(cur));
      return;
    }
    for (int first = 1; first <= rest; ++first) {
      cur.push_back(first);
      rec(rest - first);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

DimVector::DimVector(std::vector<int> dims) : dims_(std::move(dims)) {
  int prev = 0;
  for (int d : dims_) {
    if (d <= prev) throw InvalidInputError("flag dimensions must be strictly increasing");
    prev = d;
  }
}

DimVector DimVector::from_blocks(const BlockComposition& c) {
  std::vector<int> dims;
  dims.reserve(c.num_blocks());
  int acc = 0;
  for (int b : c.blocks()) {
    acc += b;
    dims.push_back(acc);
  }
  return DimVector(std::move(dims));
}

DimVector DimVector::complete(int n) {
  std::vector<int> dims(n);
  std::iota(dims.begin(), dims.end(), 1);
  return DimVector(std::move(dims));
}

std::vector<int> DimVector::block_sizes() const {
  std::vector<int> out;
  out.reserve(dims_.size());
  int prev = 0;
  for (int d : dims_) {
    out.push_back(d - prev);
    prev = d;
  }
  return out;
}

DimVector DimVector::quotient_by_first() const {
  if (dims_.empty()) throw InvalidInputError("quotient_by_first on empty flag");
  std::vector<int> out;
  out.reserve(dims_.size() - 1);
  for (size_t i = 1; i < dims_.size(); ++i) out.push_back(dims_[i] - dims_[0]);
  return DimVector(std::move(out));
}

std::string DimVector::str() const {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < dims_.size(); ++i) {
    if (i) out << ',';
    out << dims_[i];
  }
  out << ')';
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const DimVector& d) {
  return os << d.str();
}

}  // namespace unicount
