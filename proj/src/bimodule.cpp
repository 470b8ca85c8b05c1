#include "tenring/bimodule.hpp"

namespace tenring {

Bimodule Bimodule::make(AlgebraPtr la, AlgebraPtr ra, std::vector<Matrix> left,
                        std::vector<Matrix> right) {
  std::size_t d = left.empty() ? 0 : left[0].rows();
  Bimodule b = make_unchecked(std::move(la), std::move(ra), d, std::move(left),
                              std::move(right));
  b.validate();
  return b;
}

Bimodule Bimodule::make_unchecked(AlgebraPtr la, AlgebraPtr ra, std::size_t dim,
                                  std::vector<Matrix> left, std::vector<Matrix> right) {
  require(la != nullptr && ra != nullptr, Errc::ValidationError, "bimodule needs algebras");
  require_same_field(la->field(), ra->field());
  require(left.size() == la->dim() && right.size() == ra->dim(), Errc::DimensionMismatch,
          "bimodule action counts");
  for (const Matrix& m : left)
    require(m.rows() == dim && m.cols() == dim, Errc::DimensionMismatch,
            "bimodule action shape");
  for (const Matrix& m : right)
    require(m.rows() == dim && m.cols() == dim, Errc::DimensionMismatch,
            "bimodule action shape");
  Bimodule b;
  b.left_algebra = std::move(la);
  b.right_algebra = std::move(ra);
  b.dim = dim;
  b.left_action = std::move(left);
  b.right_action = std::move(right);
  return b;
}

void Bimodule::validate() const {
  as_left_module().validate();
  as_right_module().validate();
  for (std::size_t i : left_algebra->generators())
    for (std::size_t j : right_algebra->generators())
      require(left_action[i] * right_action[j] == right_action[j] * left_action[i],
              Errc::ValidationError, "left and right actions do not commute");
}

Module Bimodule::as_left_module() const {
  return Module::make_unchecked(left_algebra, Side::Left, dim, left_action);
}

Module Bimodule::as_right_module() const {
  return Module::make_unchecked(right_algebra, Side::Right, dim, right_action);
}

Bimodule zero_bimodule(const AlgebraPtr& a) {
  std::vector<Matrix> none(a->dim(), Matrix(a->field(), 0, 0));
  return Bimodule::make_unchecked(a, a, 0, none, none);
}

Bimodule regular_bimodule(const AlgebraPtr& a) {
  return Bimodule::make_unchecked(a, a, a->dim(), a->left_mult(),
                                  a->opposite()->left_mult());
}

Bimodule outer_tensor(const Module& p, const Module& q) {
  require(p.side == Side::Left && q.side == Side::Right, Errc::ValidationError,
          "outer_tensor takes a left and a right module");
  require_same_field(p.field(), q.field());
  const FieldSpec f = p.field();
  Matrix idp = Matrix::identity(f, p.dim), idq = Matrix::identity(f, q.dim);
  std::vector<Matrix> left, right;
  for (const Matrix& m : p.action) left.push_back(kron(m, idq));
  for (const Matrix& m : q.action) right.push_back(kron(idp, m));
  return Bimodule::make_unchecked(p.algebra, q.algebra, p.dim * q.dim, std::move(left),
                                  std::move(right));
}

Bimodule bimodule_direct_sum(const std::vector<Bimodule>& parts, const AlgebraPtr& la,
                             const AlgebraPtr& ra) {
  const FieldSpec f = la->field();
  std::size_t total = 0;
  for (const Bimodule& b : parts) {
    require(b.left_algebra.get() == la.get() && b.right_algebra.get() == ra.get(),
            Errc::AlgebraMismatch, "bimodule direct sum algebras");
    total += b.dim;
  }
  std::vector<Matrix> left(la->dim(), Matrix(f, total, total));
  std::vector<Matrix> right(ra->dim(), Matrix(f, total, total));
  std::size_t off = 0;
  for (const Bimodule& b : parts) {
    for (std::size_t k = 0; k < la->dim(); ++k)
      for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j)
          left[k].copy_entry(off + i, off + j, b.left_action[k], i, j);
    for (std::size_t k = 0; k < ra->dim(); ++k)
      for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j)
          right[k].copy_entry(off + i, off + j, b.right_action[k], i, j);
    off += b.dim;
  }
  return Bimodule::make_unchecked(la, ra, total, std::move(left), std::move(right));
}

TensoredModule tensor_over_R(const Bimodule& m, const Module& x) {
  require(x.side == Side::Left, Errc::AlgebraMismatch, "tensor_over_R needs a left module");
  require(m.right_algebra.get() == x.algebra.get(), Errc::AlgebraMismatch,
          "bimodule right algebra must match the module algebra");
  const FieldSpec f = m.field();
  TensorSpace sp = tensor_space(*x.algebra, m.right_action, m.dim, x.action, x.dim);
  Matrix idx = Matrix::identity(f, x.dim);
  std::vector<Matrix> act;
  for (std::size_t k = 0; k < m.left_algebra->dim(); ++k)
    act.push_back(sp.proj * kron(m.left_action[k], idx) * sp.section);
  Module mod = Module::make_unchecked(m.left_algebra, Side::Left, sp.dim, std::move(act));
  return TensoredModule{std::move(mod), std::move(sp)};
}

TensoredModule tensor_right(const Module& y, const Bimodule& m) {
  require(y.side == Side::Right, Errc::AlgebraMismatch, "tensor_right needs a right module");
  require(m.left_algebra.get() == y.algebra.get(), Errc::AlgebraMismatch,
          "bimodule left algebra must match the module algebra");
  const FieldSpec f = m.field();
  TensorSpace sp = tensor_space(*y.algebra, y.action, y.dim, m.left_action, m.dim);
  Matrix idy = Matrix::identity(f, y.dim);
  std::vector<Matrix> act;
  for (std::size_t k = 0; k < m.right_algebra->dim(); ++k)
    act.push_back(sp.proj * kron(idy, m.right_action[k]) * sp.section);
  Module mod = Module::make_unchecked(m.right_algebra, Side::Right, sp.dim, std::move(act));
  return TensoredModule{std::move(mod), std::move(sp)};
}

TensoredBimodule tensor_over_R(const Bimodule& m, const Bimodule& n) {
  require(m.right_algebra.get() == n.left_algebra.get(), Errc::AlgebraMismatch,
          "tensor_over_R bimodule algebras");
  const FieldSpec f = m.field();
  TensorSpace sp = tensor_space(*m.right_algebra, m.right_action, m.dim, n.left_action,
                                n.dim);
  Matrix idn = Matrix::identity(f, n.dim), idm = Matrix::identity(f, m.dim);
  std::vector<Matrix> left, right;
  for (std::size_t k = 0; k < m.left_algebra->dim(); ++k)
    left.push_back(sp.proj * kron(m.left_action[k], idn) * sp.section);
  for (std::size_t k = 0; k < n.right_algebra->dim(); ++k)
    right.push_back(sp.proj * kron(idm, n.right_action[k]) * sp.section);
  Bimodule b = Bimodule::make_unchecked(m.left_algebra, n.right_algebra, sp.dim,
                                        std::move(left), std::move(right));
  return TensoredBimodule{std::move(b), std::move(sp)};
}

TensorTower::TensorTower(const Bimodule& m, std::size_t cap) : m_(m), cap_(cap) {
  require(m.left_algebra.get() == m.right_algebra.get(), Errc::AlgebraMismatch,
          "tensor powers need an R-bimodule over a single algebra");
  require(cap >= 1, Errc::ValidationError, "nilpotency cap must be >= 1");
  algebra_ = m.left_algebra;
  powers_.push_back(regular_bimodule(algebra_));
  steps_.emplace_back();  // unused slot 0
  for (std::size_t i = 1; i <= cap + 1; ++i) {
    TensoredBimodule t = tensor_over_R(m_, powers_.back());
    powers_.push_back(std::move(t.bimodule));
    steps_.push_back(std::move(t.space));
    if (powers_.back().dim == 0) {
      nilpotency_ = i - 1;
      break;
    }
  }
}

const Bimodule& TensorTower::power(std::size_t i) const {
  if (i < powers_.size()) return powers_[i];
  // beyond a vanished power everything is zero
  require(nilpotency_.has_value() && i > *nilpotency_, Errc::Internal,
          "tensor power beyond computed range");
  return powers_.back();
}

const TensorSpace& TensorTower::step(std::size_t i) const {
  require(i >= 1 && i < steps_.size(), Errc::Internal, "tensor step out of range");
  return steps_[i];
}

const Matrix& TensorTower::mu(std::size_t i, std::size_t j) const {
  std::lock_guard<std::recursive_mutex> lk(mu_mutex_);
  auto key = std::make_pair(i, j);
  auto it = mu_cache_.find(key);
  if (it != mu_cache_.end()) return it->second;

  const FieldSpec f = m_.field();
  const Bimodule &pi = power(i), &pj = power(j), &pij = power(i + j);
  Matrix result(f, pij.dim, pi.dim * pj.dim);
  if (pij.dim != 0 && pi.dim != 0 && pj.dim != 0) {
    if (i == 0) {
      // r (x) p |-> r * p: column (k, l) is the left action of b_k on e_l
      for (std::size_t k = 0; k < algebra_->dim(); ++k)
        for (std::size_t l = 0; l < pj.dim; ++l)
          for (std::size_t r = 0; r < pij.dim; ++r)
            result.copy_entry(r, k * pj.dim + l, pj.left_action[k], r, l);
    } else if (j == 0) {
      // p (x) r |-> p * r
      for (std::size_t l = 0; l < pi.dim; ++l)
        for (std::size_t k = 0; k < algebra_->dim(); ++k)
          for (std::size_t r = 0; r < pij.dim; ++r)
            result.copy_entry(r, l * algebra_->dim() + k, pi.right_action[k], r, l);
    } else if (i == 1) {
      result = step(j + 1).proj;
    } else {
      // factor through P_i = M (x)_R P_{i-1} using any section of the step
      const Matrix& inner = mu(i - 1, j);
      const Matrix& outer = mu(1, i - 1 + j);
      Matrix idm = Matrix::identity(f, m_.dim);
      Matrix idpj = Matrix::identity(f, pj.dim);
      result = outer * kron(idm, inner) * kron(step(i).section, idpj);
    }
  }
  auto [pos, fresh] = mu_cache_.emplace(std::move(key), std::move(result));
  (void)fresh;
  return pos->second;
}

NilpotencyResult nilpotency_index(const TensorTower& tower) {
  return NilpotencyResult{tower.nilpotency(), tower.cap()};
}

}  // namespace tenring
