#ifndef TENRING_ALGEBRA_HPP
#define TENRING_ALGEBRA_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tenring/linalg.hpp"
#include "tenring/quiver.hpp"

namespace tenring {

class FdAlgebra;
using AlgebraPtr = std::shared_ptr<const FdAlgebra>;

struct AlgebraOrigin {
  enum class Kind { QuiverPresented, Raw } kind = Kind::Raw;
  std::optional<Presentation> presentation;
};

// Finite-dimensional associative algebra with a chosen basis. Multiplication
// is stored as the left-multiplication operators L[i] (column j of L[i] is
// the coordinate vector of b_i * b_j), so the structure constants are
// c^k_{ij} = L[i](k, j). Immutable after creation; the lazy caches are
// mutex-guarded.
class FdAlgebra : public std::enable_shared_from_this<FdAlgebra> {
 public:
  // validates associativity, unit, the idempotent axioms and (when present)
  // the radical; see create_* helpers below for the usual entry points
  static AlgebraPtr create(FieldSpec field, std::vector<std::string> basis_labels,
                           std::vector<Matrix> left_mult, Matrix unit,
                           std::vector<Matrix> idempotents, std::optional<Matrix> radical,
                           AlgebraOrigin origin, std::vector<std::size_t> generators,
                           std::vector<Path> basis_paths = {});

  FieldSpec field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const std::vector<Matrix>& left_mult() const { return left_mult_; }
  const Matrix& unit() const { return unit_; }
  const std::vector<Matrix>& idempotents() const { return idempotents_; }
  const AlgebraOrigin& origin() const { return origin_; }
  // indices of a designated algebra generating set (idempotents + arrows for
  // quiver-presented algebras; every basis element for raw ones)
  const std::vector<std::size_t>& generators() const { return generators_; }

  bool has_radical() const { return radical_.has_value(); }
  // basis of J(a) as columns; throws RadicalUnavailable when absent
  const Matrix& radical() const;

  // coordinates -> left multiplication operator
  Matrix left_mult_of(const Matrix& coords) const;
  Matrix right_mult_of(const Matrix& coords) const;
  Matrix multiply(const Matrix& x, const Matrix& y) const;  // coordinate vectors

  std::size_t idempotent_index_of_label(const std::string& label) const;

  // the opposite algebra; cached, and opposite(opposite(a)) is `a` itself
  AlgebraPtr opposite() const;

  bool is_quiver_presented() const {
    return origin_.kind == AlgebraOrigin::Kind::QuiverPresented;
  }
  // basis as relation-free paths; quiver-presented algebras only
  const std::vector<Path>& basis_paths() const;

  std::string describe() const;

  // opaque lazily-built caches owned by higher layers (projective data, ...)
  static constexpr std::size_t kLazySlots = 2;
  mutable std::once_flag lazy_once[kLazySlots];
  mutable std::shared_ptr<const void> lazy_slot[kLazySlots];

 private:
  FdAlgebra() = default;

  FieldSpec field_;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Matrix> left_mult_;
  Matrix unit_;
  std::vector<Matrix> idempotents_;
  std::optional<Matrix> radical_;
  AlgebraOrigin origin_;
  std::vector<std::size_t> generators_;
  std::vector<Path> basis_paths_;  // quiver-presented only

  mutable std::mutex cache_mu_;
  mutable AlgebraPtr opposite_cache_;
  mutable std::weak_ptr<const FdAlgebra> opposite_back_;

  friend AlgebraPtr make_opposite(const FdAlgebra&);
};

// basis = relation-free paths; multiplication by path concatenation
// (right-to-left: the product q*p is "traverse p, then q")
AlgebraPtr build_from_quiver(const Presentation& p, FieldSpec f);

// raw multiplication tables; radical is required over F_p and computed from
// the trace form over Q when omitted
AlgebraPtr build_from_structure_constants(FieldSpec f, std::vector<std::string> labels,
                                          std::vector<Matrix> left_mult, Matrix unit,
                                          std::vector<Matrix> idempotents,
                                          std::optional<Matrix> radical);

// trace-form radical over Q (Dickson); used for Raw rational algebras
Matrix trace_form_radical(const std::vector<Matrix>& left_mult, FieldSpec f);

// fresh opposite algebra (prefer FdAlgebra::opposite(), which caches)
AlgebraPtr make_opposite(const FdAlgebra& a);

}  // namespace tenring

#endif
