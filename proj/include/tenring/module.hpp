#ifndef TENRING_MODULE_HPP
#define TENRING_MODULE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "tenring/algebra.hpp"

namespace tenring {

enum class Side { Left, Right };
inline Side flip(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
inline const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

// Finitely generated one-sided module, given by one action matrix per algebra
// basis element. A right module stores x |-> x*b_i, which is a left module
// over the opposite algebra under the same basis indexing; `effective()` is
// the algebra those matrices represent.
struct Module {
  AlgebraPtr algebra;  // nominal
  Side side = Side::Left;
  std::size_t dim = 0;
  std::vector<Matrix> action;

  AlgebraPtr effective() const {
    return side == Side::Left ? algebra : algebra->opposite();
  }
  FieldSpec field() const { return algebra->field(); }

  // sum_k coords(k) * action[k]
  Matrix action_of(const Matrix& coords) const;

  static Module make(AlgebraPtr a, Side side, std::vector<Matrix> action);  // validates
  static Module make_unchecked(AlgebraPtr a, Side side, std::size_t dim,
                               std::vector<Matrix> action);
  static Module zero(AlgebraPtr a, Side side);
  void validate() const;
};

Module regular_module(const AlgebraPtr& a, Side side);

struct ModuleHom {
  Module source, target;
  Matrix matrix;  // target.dim x source.dim

  static ModuleHom make(Module src, Module tgt, Matrix m);  // checks intertwining
  static ModuleHom make_unchecked(Module src, Module tgt, Matrix m);
  bool intertwines() const;
};

void require_compatible(const Module& x, const Module& y);

// basis of the intertwiner space Hom(x, y)
std::vector<Matrix> hom_basis(const Module& x, const Module& y);
std::size_t hom_dim(const Module& x, const Module& y);

// flattened hom basis as columns / coordinates of a hom in that basis
Matrix flatten_homs(const std::vector<Matrix>& homs, std::size_t rows, std::size_t cols,
                    FieldSpec f);
Matrix hom_coords(const std::vector<Matrix>& basis, const Matrix& h);
Matrix hom_from_coords(const std::vector<Matrix>& basis, const Matrix& coords,
                       std::size_t rows, std::size_t cols, FieldSpec f);

struct DirectSum {
  Module module;
  std::vector<std::pair<std::size_t, std::size_t>> ranges;  // (offset, dim) per summand
};
DirectSum direct_sum(const AlgebraPtr& a, Side side, const std::vector<Module>& xs);
Matrix injection_matrix(const DirectSum& s, std::size_t i, FieldSpec f);
Matrix projection_matrix(const DirectSum& s, std::size_t i, FieldSpec f);

// induced module structures on invariant subspaces / quotients
Module submodule_on(const Module& x, const Matrix& inclusion);
Module quotient_on(const Module& x, const QuotientSpace& q);

struct HomFactorization {
  Module kernel;
  Matrix kernel_inclusion;  // source.dim x dim(kernel)
  Module image;
  Matrix image_inclusion;   // target.dim x dim(image)
  Matrix image_projection;  // dim(image) x source.dim
  Module cokernel;
  Matrix cokernel_projection;  // dim(cokernel) x target.dim
  Matrix cokernel_section;     // target.dim x dim(cokernel) (linear, not a hom)
};
HomFactorization hom_factorization(const ModuleHom& h);

struct IsoResult {
  enum class V { Yes, No, Unknown } verdict;
  std::optional<Matrix> witness;
  bool yes() const { return verdict == V::Yes; }
  bool no() const { return verdict == V::No; }
};
IsoResult is_isomorphic(const Module& x, const Module& y, std::size_t trials,
                        std::uint64_t seed);

// simples and indecomposable projectives of the effective algebra, one per
// idempotent (basic algebras only)
struct ProjectiveData {
  std::vector<Module> projectives;     // P_i with its own coordinates
  std::vector<Matrix> incl;            // algebra coords of P_i basis (dim x d_i)
  std::vector<Module> simples;         // S_i (dim 1)
  std::vector<Matrix> cover_maps;      // P_i -> S_i (1 x d_i)
};
const ProjectiveData& projective_data(const AlgebraPtr& effective_algebra);

struct SimplesProjectives {
  std::vector<Module> simples;
  std::vector<Module> projectives;
  std::vector<ModuleHom> covers;  // P_i ->> S_i
};
SimplesProjectives simples_and_projectives(const AlgebraPtr& a, Side side = Side::Left);

struct Cover {
  Module proj;
  Matrix map;  // x.dim x proj.dim, surjective with superfluous kernel
  std::vector<std::size_t> multiplicities;
};
Cover projective_cover(const Module& x);
Module syzygy(const Module& x);
bool is_projective_module(const Module& x);

// k-linear dual: transposed actions on the flipped side
Module dual_D(const Module& x);
// Hom(x, regular) with its natural opposite-side action
Module star(const Module& x);
// star on morphisms: star(f): star(target) -> star(source)
Matrix star_map(const Module& src, const Module& tgt, const Matrix& f,
                const std::vector<Matrix>& star_src_basis,
                const std::vector<Matrix>& star_tgt_basis);
// the natural evaluation x -> star(star(x)) in the chosen hom bases
Matrix double_dual_map(const Module& x, const Module& star_x,
                       const std::vector<Matrix>& star_basis, const Module& star_star_x,
                       const std::vector<Matrix>& star_star_basis);

// quotient of Y (x) X by the relations (y*b (x) x) - (y (x) b*x); proj/section
// give canonical coordinates
struct TensorSpace {
  std::size_t dim = 0;
  Matrix proj;     // dim x (dy*dx)
  Matrix section;  // (dy*dx) x dim
};
TensorSpace tensor_space(const FdAlgebra& a, const std::vector<Matrix>& right_act,
                         std::size_t dy, const std::vector<Matrix>& left_act, std::size_t dx);

// random cokernel of a map between random projective sums (sampling aid)
Module random_module(const AlgebraPtr& a, Side side, SeededRng& rng,
                     std::size_t max_summands = 2);

}  // namespace tenring

#endif
