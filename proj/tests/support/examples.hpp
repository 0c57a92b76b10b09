// Supports shared by the unit and acceptance tests.
#pragma once

#include "jacnewton/arith.hpp"

#include <vector>

namespace testdata {

using jacnewton::IntVec;

inline std::vector<IntVec> e8() { return {{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}; }

// xy + xz + 2yz + z^2
inline std::vector<IntVec> twosimp() { return {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}}; }

// x^2, y^2, xz, xw, yz, yw, z^3, w^3
inline std::vector<IntVec> counter() {
  return {{2, 0, 0, 0}, {0, 2, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1},
          {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 3, 0}, {0, 0, 0, 3}};
}

// x1^2 x2^2 x3^2 x4^2 + x1 x3^8 + x2 x4^8 + x1^8 x4 + x2^8 x3 (+ x2^4 x3^4 when delta = 1)
inline std::vector<IntVec> fukui(int delta) {
  std::vector<IntVec> s{{2, 2, 2, 2}, {1, 0, 8, 0}, {0, 1, 0, 8}, {8, 0, 0, 1}, {0, 8, 1, 0}};
  if (delta) s.push_back({0, 4, 4, 0});
  return s;
}

}  // namespace testdata
