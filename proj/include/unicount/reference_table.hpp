#pragma once

#include "unicount/polynomial.hpp"

namespace unicount {

// Known-good Borel-radical class-count polynomials k(U_n, PGL_n) for
// n = 2..10, kept as an independent cross-check for the computed table.
// Out-of-range n is rejected with InvalidInputError.
const Polynomial& class_count_reference(int n);

}  // namespace unicount
