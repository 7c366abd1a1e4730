#include "unicount/ff/field.hpp"

#include "unicount/errors.hpp"

namespace unicount::ff {

bool is_supported_prime(int p) {
  return p == 2 || p == 3 || p == 5 || p == 7 || p == 11 || p == 13;
}

PrimeField::PrimeField(int p) : p_(p) {
  if (!is_supported_prime(p))
    throw InvalidInputError("PrimeField: unsupported modulus " + std::to_string(p));
  for (int a = 1; a < p_; ++a)
    for (int b = 1; b < p_; ++b)
      if (a * b % p_ == 1) {
        inv_[a] = b;
        break;
      }
}

int PrimeField::inv(int a) const {
  if (a == 0) throw InvalidInputError("PrimeField: inverse of zero");
  return inv_[a];
}

}  // namespace unicount::ff
