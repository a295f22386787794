#pragma once

#include "ordtop/qpm.hpp"
#include "ordtop/space.hpp"

namespace ordtop::fixtures {

// Two points, discrete topology, 0 <= 1.
inline FiniteSpace disc2() {
  return make_space(2, {point_bit(0), point_bit(1)}, {{0, 1}}, false, "disc2");
}

// Two points, opens {{}, {1}, {0,1}}, 0 <= 1.
inline FiniteSpace sierpinski() {
  return make_space(2, {point_bit(1)}, {{0, 1}}, false, "sierpinski");
}

// Three points, discrete topology, chain 0 <= 1 <= 2.
inline FiniteSpace chain3() {
  return make_space(3, {point_bit(0), point_bit(1), point_bit(2)}, {{0, 1}, {1, 2}}, false,
                    "chain3");
}

// The quasi-metric with p(1,0) = 1 and every other entry 0; admissible
// for disc2, not for sierpinski.
inline Qpm sierpinski_qpm() {
  Qpm p(2);
  p.at(1, 0) = 1;
  return p;
}

}  // namespace ordtop::fixtures
