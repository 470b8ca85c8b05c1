#ifndef TENRING_QUIVER_HPP
#define TENRING_QUIVER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "tenring/errors.hpp"

namespace tenring {

struct Arrow {
  std::string name;
  std::size_t source = 0;  // 0-based
  std::size_t target = 0;
};

struct Quiver {
  std::size_t vertex_count = 0;
  std::vector<Arrow> arrows;

  std::size_t arrow_index(const std::string& name) const;
  void validate() const;
};

// A path is a sequence of arrow indices in traversal order (first arrow
// traversed first). The textual form is right-to-left: the relation string
// "a2*a1" means "traverse a1, then a2" and is stored as {a1, a2}.
struct Path {
  std::size_t source = 0;  // needed when arrows is empty (vertex path e_i)
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  std::size_t target(const Quiver& q) const {
    return arrows.empty() ? source : q.arrows[arrows.back()].target;
  }
  std::string label(const Quiver& q) const;
  friend bool operator==(const Path&, const Path&) = default;
};

// Bound quiver presentation with monomial relations: each relation is a
// composable path of length >= 2 (stored in traversal order).
struct Presentation {
  Quiver quiver;
  std::vector<std::vector<std::size_t>> relations;

  void validate() const;
  Presentation reversed() const;  // opposite quiver with reversed relations
};

// All relation-free paths, or InfiniteDimensional if there are infinitely
// many (detected by a cycle search on relation-free suffix states).
// Order: by length, then discovery order (vertices, then arrows, ...).
std::vector<Path> enumerate_relation_free_paths(const Presentation& p);

bool path_contains_relation_suffix(const Presentation& p,
                                   const std::vector<std::size_t>& arrows);

}  // namespace tenring

#endif
