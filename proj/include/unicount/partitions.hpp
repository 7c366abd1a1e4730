#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace unicount {

// Integer partition, stored as weakly decreasing positive parts.  The empty
// partition (of 0) is valid.  Jordan types of unipotent/nilpotent matrices
// are partitions of the ambient dimension.
class Partition {
 public:
  Partition() = default;
  // Accepts parts in any order and sorts them; zero/negative parts rejected.
  explicit Partition(std::vector<int> parts);
  // mult[k] = number of parts of size k+1 (so mult has one slot per size).
  static Partition from_multiplicities(const std::vector<int>& mult);

  int n() const { return n_; }  // sum of parts
  int num_parts() const { return static_cast<int>(parts_.size()); }
  int max_part() const { return parts_.empty() ? 0 : parts_.front(); }
  const std::vector<int>& parts() const { return parts_; }
  int multiplicity(int size) const;  // number of parts equal to `size`
  // number of parts strictly greater than `size`
  int parts_above(int size) const;

  std::string str() const;  // "(2,1)"; "()" for the empty partition

  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// All partitions of n in reverse-lexicographic order:
// (n), (n-1,1), ..., (1,...,1).  partitions_of(0) == {()}.
std::vector<Partition> partitions_of(int n);

}  // namespace unicount
