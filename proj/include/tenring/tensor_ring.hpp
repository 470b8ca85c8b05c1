#ifndef TENRING_TENSOR_RING_HPP
#define TENRING_TENSOR_RING_HPP

#include "tenring/bimodule.hpp"

namespace tenring {

// T_R(M) = R (+) M (+) M^{(x)2} (+) ... (+) M^{(x)N} as a concrete algebra,
// with the grade layout of its basis and the tensor tower that produced it.
class TensorRing {
 public:
  static TensorRing build(const AlgebraPtr& r, const Bimodule& m, std::size_t cap);

  const AlgebraPtr& base() const { return base_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  const TowerPtr& tower() const { return tower_; }
  std::size_t nilpotency() const { return nilpotency_; }
  std::size_t grade_count() const { return ranges_.size(); }
  std::pair<std::size_t, std::size_t> grade_range(std::size_t g) const { return ranges_[g]; }
  std::size_t basis_index(std::size_t grade, std::size_t s) const {
    return ranges_[grade].first + s;
  }

  // T as an (R, R)-bimodule via the grade-0 embedding of R (the underlying
  // bimodule of U(T))
  const Bimodule& as_r_bimodule() const { return r_bimodule_; }

 private:
  AlgebraPtr base_;
  AlgebraPtr algebra_;
  TowerPtr tower_;
  std::size_t nilpotency_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> ranges_;
  Bimodule r_bimodule_;
};

// F(X) = M (x)_R X together with the surjection data; the nested functor
// application that everything in this layer shares
struct FInstance {
  Module module;
  TensorSpace space;
};

FInstance apply_F(const TensorRing& t, const Module& x);
// F on morphisms: F(f): F(X) -> F(Y)
Matrix F_of_map(const TensorRing& t, const FInstance& fx, const FInstance& fy,
                const Matrix& f);

// F^0(X) = X, F^{i}(X) = F(F^{i-1}(X)), up to F^{N+1} (which vanishes)
std::vector<FInstance> f_tower(const TensorRing& t, const Module& x);

// A representation (X, u) of M (x)_R -, i.e. a left T_R(M)-module in its
// (base module, structure map) form. u maps F(X) -> X. The F-tower of the
// base is shared between copies (enumeration yields many pairs per base).
struct RepPair {
  Module base;
  Matrix u;
  std::shared_ptr<const std::vector<FInstance>> tower;
  const FInstance& tw(std::size_t i) const { return (*tower)[i]; }
};

std::shared_ptr<const std::vector<FInstance>> shared_f_tower(const TensorRing& t,
                                                             const Module& x);

RepPair make_rep_pair(const TensorRing& t, const Module& x, const Matrix& u);

// dictionary between T-modules and representations; both round trips are
// identities on action matrices
Module rep_to_module(const TensorRing& t, const RepPair& rp);
RepPair module_to_rep(const TensorRing& t, const Module& xt);

struct Induced {
  Module t_module;      // Ind(z) as a T-module
  RepPair rep;          // the same object as (⊕ F^i z, c_z)
  std::vector<FInstance> summand_tower;  // F^0 z .. F^{N+1} z
  std::vector<std::pair<std::size_t, std::size_t>> ranges;  // summand layout
  Matrix unit_map;      // z -> U(Ind z), the grade-0 inclusion
};
Induced induce(const TensorRing& t, const Module& z);

// Ind on morphisms: ⊕ F^i(f) between the base sums of two inductions
Matrix induce_map(const TensorRing& t, const Induced& ia, const Induced& ib,
                  const Matrix& f);

// the right-handed induction z (x)_R T as a right T-module
Module right_induce(const TensorRing& t, const Module& z);

// 0 -> Ind(F X) --phi--> Ind(X) --eta--> (X, u) -> 0, exactness verified
struct StandardSequence {
  Induced ind_fx;
  Induced ind_x;
  RepPair x;
  Matrix phi;  // Ind(FX).base -> Ind(X).base
  Matrix eta;  // Ind(X).base -> X
};
StandardSequence standard_sequence(const TensorRing& t, const RepPair& x);

// Detects representations in the image of Ind: u must be a split mono whose
// cokernel splitting exists as a module map (an exact linear condition).
struct SplitMonoResult {
  enum class V { Induced, NotInduced } verdict;
  std::optional<Module> generator;  // A with (X, u) iso (Ind A, c_A)
  std::optional<Matrix> iso;        // Ind(A).base -> X
};
SplitMonoResult split_mono_normal_form(const TensorRing& t, const RepPair& x);

}  // namespace tenring

#endif
