#ifndef TENRING_HOMOLOGY_HPP
#define TENRING_HOMOLOGY_HPP

#include "tenring/module.hpp"

namespace tenring {

// A length-n segment of a minimal projective resolution
//   P^{-n} -> ... -> P^{-1} -> P^0 -> X -> 0,
// exact at X, at P^0 and at every interior term (asserted at construction).
// The same struct carries forward coresolutions 0 -> X -> P^0 -> ... -> P^n
// with `forward` set; then differentials[i] maps P^{i-1} -> P^i and the
// augmentation embeds X into P^0.
struct ResolutionSegment {
  Module target;
  std::vector<Module> modules;        // P^0 .. P^{+-n}
  std::vector<Matrix> differentials;  // i = 1..n
  Matrix augmentation;
  bool forward = false;
};

ResolutionSegment projective_resolution(const Module& x, std::size_t n);

struct HomDimVerdict {
  enum class Kind { Finite, InfinitePeriodic, AtLeast };
  Kind kind = Kind::AtLeast;
  std::size_t n = 0;          // the dimension (Finite) or the bound (AtLeast)
  std::size_t period = 0;     // InfinitePeriodic
  std::size_t witness_i = 0;  // syzygy indices i < j with Omega^i iso Omega^j
  std::size_t witness_j = 0;

  static HomDimVerdict finite(std::size_t n) { return {Kind::Finite, n, 0, 0, 0}; }
  static HomDimVerdict periodic(std::size_t i, std::size_t j) {
    return {Kind::InfinitePeriodic, 0, j - i, i, j};
  }
  static HomDimVerdict at_least(std::size_t b) { return {Kind::AtLeast, b, 0, 0, 0}; }

  bool is_finite() const { return kind == Kind::Finite; }
  bool is_infinite_certified() const { return kind == Kind::InfinitePeriodic; }
  bool is_inconclusive() const { return kind == Kind::AtLeast; }
  std::string to_string() const;
  friend bool operator==(const HomDimVerdict&, const HomDimVerdict&) = default;
};

struct HomologyOptions {
  std::size_t pd_bound = 24;
  std::size_t iso_trials = 8;
  std::uint64_t seed = 0;
};

// projective dimension by iterated minimal syzygies; infinite only with a
// periodicity witness
HomDimVerdict pd_verdict(const Module& x, const HomologyOptions& opt);

std::size_t ext_dim(const Module& x, const Module& y, std::size_t i);

// Tor_i(y, x) from a resolution of x (right module y, left module x)
std::size_t tor_dim(const Module& y, const Module& x, std::size_t i);
// the same value from a resolution of y (balance cross-check route)
std::size_t tor_dim_alt(const Module& y, const Module& x, std::size_t i);

// dim of y (x)_R x
std::size_t tensor_dim(const Module& y, const Module& x);

}  // namespace tenring

#endif
