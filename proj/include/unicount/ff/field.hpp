#pragma once

#include <array>

namespace unicount::ff {

// Arithmetic in F_p for the small primes the oracle supports.  Elements are
// plain ints in [0, p); inversion is table-driven.
class PrimeField {
 public:
  explicit PrimeField(int p);

  int p() const { return p_; }
  int add(int a, int b) const {
    int s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  int sub(int a, int b) const {
    int s = a - b;
    return s < 0 ? s + p_ : s;
  }
  int neg(int a) const { return a == 0 ? 0 : p_ - a; }
  int mul(int a, int b) const { return (a * b) % p_; }
  int inv(int a) const;  // a != 0

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  int p_;
  std::array<int, 14> inv_{};
};

bool is_supported_prime(int p);  // {2, 3, 5, 7, 11, 13}

}  // namespace unicount::ff
