#ifndef TENRING_BIMODULE_HPP
#define TENRING_BIMODULE_HPP

#include <map>
#include <memory>
#include <mutex>

#include "tenring/homology.hpp"

namespace tenring {

// Two commuting one-sided structures over a pair of algebras (equal for the
// R-bimodules of the tensor-ring construction).
struct Bimodule {
  AlgebraPtr left_algebra, right_algebra;
  std::size_t dim = 0;
  std::vector<Matrix> left_action;   // m |-> b * m, per basis element of left_algebra
  std::vector<Matrix> right_action;  // m |-> m * b, per basis element of right_algebra

  FieldSpec field() const { return left_algebra->field(); }

  static Bimodule make(AlgebraPtr la, AlgebraPtr ra, std::vector<Matrix> left,
                       std::vector<Matrix> right);  // validates
  static Bimodule make_unchecked(AlgebraPtr la, AlgebraPtr ra, std::size_t dim,
                                 std::vector<Matrix> left, std::vector<Matrix> right);
  void validate() const;

  Module as_left_module() const;    // forget the right action
  Module as_right_module() const;   // forget the left action
  bool is_zero() const { return dim == 0; }
};

Bimodule zero_bimodule(const AlgebraPtr& a);
Bimodule regular_bimodule(const AlgebraPtr& a);  // R as an R-bimodule

// M = P (x)_k Q for a left module P and right module Q
Bimodule outer_tensor(const Module& p, const Module& q);

Bimodule bimodule_direct_sum(const std::vector<Bimodule>& parts, const AlgebraPtr& la,
                             const AlgebraPtr& ra);

// M (x)_R X for a left module X, with the canonical surjection data
struct TensoredModule {
  Module module;      // left module over m.left_algebra
  TensorSpace space;  // from M (x)_k X
};
TensoredModule tensor_over_R(const Bimodule& m, const Module& x);

// Y (x)_R M for a right module Y
TensoredModule tensor_right(const Module& y, const Bimodule& m);

// M (x)_R N with both remaining outer structures
struct TensoredBimodule {
  Bimodule bimodule;
  TensorSpace space;
};
TensoredBimodule tensor_over_R(const Bimodule& m, const Bimodule& n);

// The tower of tensor powers M^{(x) 0} = R, M^{(x) i+1} = M (x)_R M^{(x) i},
// together with the multiplication maps mu(i,j): P_i (x)_k P_j -> P_{i+j}.
// Heavy pieces are computed once and shared; mu results are memoized.
class TensorTower {
 public:
  // builds powers until one vanishes or `cap`+1 powers were computed
  TensorTower(const Bimodule& m, std::size_t cap);

  const Bimodule& base_bimodule() const { return m_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  // N with M^{(x) N+1} = 0, or nullopt when not nilpotent within the cap
  std::optional<std::size_t> nilpotency() const { return nilpotency_; }
  std::size_t cap() const { return cap_; }

  const Bimodule& power(std::size_t i) const;
  // projection M (x)_k P_{i-1} -> P_i from the construction of power i
  const TensorSpace& step(std::size_t i) const;
  std::size_t power_count() const { return powers_.size(); }

  // canonical multiplication P_i (x)_k P_j -> P_{i+j} (zero rows when the
  // target power vanishes)
  const Matrix& mu(std::size_t i, std::size_t j) const;

 private:
  Bimodule m_;
  AlgebraPtr algebra_;
  std::size_t cap_ = 0;
  std::optional<std::size_t> nilpotency_;
  std::vector<Bimodule> powers_;
  std::vector<TensorSpace> steps_;  // steps_[i] built with powers_[i], i >= 1
  mutable std::recursive_mutex mu_mutex_;
  mutable std::map<std::pair<std::size_t, std::size_t>, Matrix> mu_cache_;
};

using TowerPtr = std::shared_ptr<const TensorTower>;

struct NilpotencyResult {
  std::optional<std::size_t> index;  // N, or nullopt for NotNilpotentUpTo(cap)
  std::size_t cap = 0;
};
NilpotencyResult nilpotency_index(const TensorTower& tower);

}  // namespace tenring

#endif
