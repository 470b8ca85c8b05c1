#ifndef TENRING_TESTS_FIXTURES_HPP
#define TENRING_TESTS_FIXTURES_HPP

#include "tenring/algebra.hpp"

namespace tenring::fixtures {

// 1 -a1-> 2 -a2-> 3 -a3-> 1 with relations a2*a1, a3*a2, a1*a3
// (the radical-square-zero self-injective Nakayama algebra on a 3-cycle)
inline Presentation three_cycle() {
  Presentation p;
  p.quiver.vertex_count = 3;
  p.quiver.arrows = {{"a1", 0, 1}, {"a2", 1, 2}, {"a3", 2, 0}};
  p.relations = {{0, 1}, {1, 2}, {2, 0}};  // traversal order: a2*a1 is {a1, a2}
  return p;
}

// k[x]/(x^2): one vertex, one loop, relation x*x
inline Presentation loop_x2() {
  Presentation p;
  p.quiver.vertex_count = 1;
  p.quiver.arrows = {{"x", 0, 0}};
  p.relations = {{0, 0}};
  return p;
}

// hereditary path algebra of 1 -a-> 2
inline Presentation a2_quiver() {
  Presentation p;
  p.quiver.vertex_count = 2;
  p.quiver.arrows = {{"a", 0, 1}};
  return p;
}

// k x k: two vertices, no arrows
inline Presentation two_points() {
  Presentation p;
  p.quiver.vertex_count = 2;
  return p;
}

}  // namespace tenring::fixtures

#endif
