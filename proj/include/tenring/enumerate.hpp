#ifndef TENRING_ENUMERATE_HPP
#define TENRING_ENUMERATE_HPP

#include "tenring/tensor_ring.hpp"

namespace tenring {

struct EnumerationOptions {
  std::size_t dim_cap = 6;
  bool dedup = true;
  std::size_t iso_trials = 8;
  std::uint64_t seed = 0;
  // upper bound on raw matrix assignments scanned per dimension vector
  std::size_t work_budget = std::size_t(1) << 22;
};

// All modules of total dimension <= dim_cap over a quiver-presented algebra
// over F_p, deduplicated up to isomorphism, in a deterministic order.
// Exhaustive enumeration over Q is not possible (FieldUnsupported).
std::vector<Module> enumerate_modules(const AlgebraPtr& a, Side side,
                                      const EnumerationOptions& opt);

// All representations (X, u) with dim X <= dim_cap: X runs over the module
// classes of the base, u over the entire hom space Hom(F(X), X). Covers every
// T-module of that dimension (possibly with repetition of classes).
std::vector<RepPair> enumerate_rep_pairs(const TensorRing& t, const EnumerationOptions& opt);

// T-modules up to isomorphism, via the representation enumeration
std::vector<Module> enumerate_t_modules(const TensorRing& t, const EnumerationOptions& opt);

}  // namespace tenring

#endif
