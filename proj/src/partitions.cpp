#include "unicount/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

#include "unicount/errors.hpp"

namespace unicount {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw InvalidInputError("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_multiplicities(const std::vector<int>& mult) {
  std::vector<int> parts;
  for (size_t k = mult.size(); k-- > 0;) {
    if (mult[k] < 0) throw InvalidInputError("negative multiplicity");
    parts.insert(parts.end(), mult[k], static_cast<int>(k) + 1);
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int size) const {
  int c = 0;
  for (int p : parts_) c += (p == size);
  return c;
}

int Partition::parts_above(int size) const {
  int c = 0;
  for (int p : parts_) c += (p > size);
  return c;
}

std::string Partition::str() const {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  out << ')';
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << p.str();
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw InvalidInputError("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  // descending first parts give reverse-lexicographic order
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.emplace_back(cur);  // re-validates; cheap at these sizes
      return;
    }
    for (int first = std::min(rest, max_part); first >= 1; --first) {
      cur.push_back(first);
      rec(rest - first, first);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace unicount
