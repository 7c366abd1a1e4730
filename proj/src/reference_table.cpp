#include "unicount/reference_table.hpp"

#include <array>
#include <utility>
#include <vector>

#include "unicount/errors.hpp"

namespace unicount {

namespace {

Polynomial from_terms(std::initializer_list<std::pair<int, long>> terms) {
  int deg = 0;
  for (const auto& [e, c] : terms) deg = std::max(deg, e);
  std::vector<Int> coeffs(deg + 1, Int(0));
  for (const auto& [e, c] : terms) coeffs[e] = c;
  return Polynomial(std::move(coeffs));
}

std::array<Polynomial, 9> build_reference() {
  std::array<Polynomial, 9> t;
  t[0] = from_terms({{2, 1}, {1, 1}, {0, -2}});
  t[1] = from_terms({{5, 1}, {3, 1}, {2, -3}, {1, -2}, {0, 3}});
  t[2] = from_terms({{9, 1}, {7, -1}, {6, 2}, {5, -3}, {4, -2}, {3, -4},
                     {2, 9}, {1, 3}, {0, -5}});
  t[3] = from_terms({{14, 1}, {12, -1}, {11, -1}, {10, 3}, {9, -5}, {8, 2},
                     {6, -9}, {5, 11}, {4, 10}, {3, -1}, {2, -13}, {1, -4},
                     {0, 7}});
  t[4] = from_terms({{20, 1}, {18, -1}, {17, -1}, {16, -1}, {15, 5}, {14, -6},
                     {13, -3}, {12, 12}, {11, 3}, {10, -40}, {9, 44}, {8, -7},
                     {7, 5}, {6, 3}, {5, -5}, {4, -38}, {3, 11}, {2, 24},
                     {1, 5}, {0, -11}});
  t[5] = from_terms({{27, 1}, {25, -1}, {24, -1}, {23, -1}, {21, 6}, {20, -6},
                     {19, -4}, {18, 3}, {17, 16}, {16, 2}, {15, -45}, {14, 9},
                     {13, 65}, {12, -36}, {11, -47}, {10, 118}, {9, -130},
                     {8, 80}, {7, -85}, {6, 25}, {5, 34}, {4, 46}, {3, -27},
                     {2, -31}, {1, -6}, {0, 15}});
  t[6] = from_terms({{35, 1}, {33, -1}, {32, -1}, {31, -1}, {28, 8}, {27, -7},
                     {26, -5}, {25, 3}, {24, 2}, {23, 27}, {22, -8}, {21, -76},
                     {20, 66}, {19, 9}, {18, 8}, {17, -96}, {16, 109},
                     {15, 56}, {14, -73}, {13, -266}, {12, 357}, {11, 93},
                     {10, -530}, {9, 278}, {8, 253}, {7, -153}, {6, -52},
                     {5, 11}, {4, -96}, {3, 51}, {2, 48}, {1, 7}, {0, -22}});
  t[7] = from_terms({{44, 1}, {42, -1}, {41, -1}, {40, -1}, {37, 1}, {36, 9},
                     {35, -8}, {34, -6}, {33, 3}, {32, 1}, {31, 8}, {30, 25},
                     {29, -2}, {28, -113}, {27, 49}, {26, 107}, {25, -60},
                     {24, 81}, {23, -326}, {22, 97}, {21, 702}, {20, -603},
                     {19, -446}, {18, 337}, {17, 760}, {16, -869}, {15, 491},
                     {14, -957}, {13, 1063}, {12, -142}, {11, 123}, {10, -939},
                     {9, 1130}, {8, -622}, {7, -255}, {6, 429}, {5, -60},
                     {4, 124}, {3, -92}, {2, -60}, {1, -8}, {0, 30}});
  t[8] = from_terms({{54, 1}, {52, -1}, {51, -1}, {50, -1}, {47, 1}, {46, 1},
                     {45, 10}, {44, -9}, {43, -7}, {42, 2}, {41, 1}, {40, 9},
                     {39, -3}, {38, 41}, {37, -12}, {36, -144}, {35, 61},
                     {34, 77}, {33, 89}, {32, -90}, {31, -5}, {30, -189},
                     {29, -109}, {28, 561}, {27, 256}, {26, -746}, {25, -50},
                     {24, -1070}, {23, 3249}, {22, -682}, {21, -4884},
                     {20, 3467}, {19, 5522}, {18, -8703}, {17, 757},
                     {16, 5424}, {15, -1423}, {14, -1450}, {13, -4812},
                     {12, 10000}, {11, -6872}, {10, 726}, {9, 1638},
                     {8, -555}, {7, 509}, {6, -858}, {5, 307}, {4, -222},
                     {3, 137}, {2, 85}, {1, 9}, {0, -42}});
  return t;
}

}  // namespace

const Polynomial& class_count_reference(int n) {
  static const std::array<Polynomial, 9> table = build_reference();
  if (n < 2 || n > 10)
    throw InvalidInputError("class_count_reference: n must be in [2,10]");
  return table[n - 2];
}

}  // namespace unicount
