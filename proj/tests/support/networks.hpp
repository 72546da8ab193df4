#pragma once

#include <string>

#include "bnelim/network.hpp"

namespace fixtures {

inline bnelim::BooleanNetwork net(const std::string& text) { return bnelim::parse_network(text); }

inline bnelim::BooleanNetwork small_example() {
  return net(
      "x1, !x2 & x3 | x2 & !x3\n"
      "x2, x1 & x3 | !x1 & !x3\n"
      "x3, !x1 & !x2 | x2 & x3\n");
}

inline bnelim::BooleanNetwork forward() { return net("u, !u\nv, u\nw, u & w | !v & w | u & !v\n"); }
inline bnelim::BooleanNetwork neg_loop() { return net("x1, !x2\nx2, !x2\n"); }
inline bnelim::BooleanNetwork edge_loss() { return net("x1, x1 & !x2\nx2, x1 & !x2\n"); }
inline bnelim::BooleanNetwork strict_fixed() { return net("x1, 1\nx2, !x1 | !x2\n"); }
inline bnelim::BooleanNetwork strict_two() { return net("x1, !x2\nx2, x1\n"); }
inline bnelim::BooleanNetwork identity(unsigned n) {
  std::string text;
  for (unsigned k = 1; k <= n; ++k) {
    text += "x" + std::to_string(k) + ", x" + std::to_string(k) + "\n";
  }
  return net(text);
}
inline bnelim::BooleanNetwork zero(unsigned n) {
  std::string text;
  for (unsigned k = 1; k <= n; ++k) {
    text += "x" + std::to_string(k) + ", 0\n";
  }
  return net(text);
}
inline bnelim::BooleanNetwork cascade() { return net("x1, !x1\nx2, x1\nx3, x2\n"); }
inline bnelim::BooleanNetwork toggle() { return net("x1, x2\nx2, x1\n"); }

}  // namespace fixtures
