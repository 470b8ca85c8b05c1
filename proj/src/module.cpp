#include "tenring/module.hpp"

#include <algorithm>

namespace tenring {

namespace {

Matrix vec_of(const Matrix& m) {
  Matrix v(m.field(), m.rows() * m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.copy_entry(i * m.cols() + j, 0, m, i, j);
  return v;
}

Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols, FieldSpec f,
             std::size_t col_index) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.copy_entry(i, j, v, i * cols + j, col_index);
  return m;
}

Module relabel(Module m, const AlgebraPtr& a, Side side) {
  require(m.effective().get() == (side == Side::Left ? a : a->opposite()).get(),
          Errc::Internal, "relabel: effective algebra mismatch");
  m.algebra = a;
  m.side = side;
  return m;
}

}  // namespace

Matrix Module::action_of(const Matrix& coords) const {
  require(coords.rows() == algebra->dim() && coords.cols() == 1, Errc::DimensionMismatch,
          "action_of coordinate shape");
  Matrix acc(field(), dim, dim);
  for (std::size_t k = 0; k < algebra->dim(); ++k) {
    if (coords.entry_is_zero(k, 0)) continue;
    acc = acc + action[k].scaled_by(coords, k, 0);
  }
  return acc;
}

Module Module::make(AlgebraPtr a, Side side, std::vector<Matrix> action) {
  std::size_t d = action.empty() ? 0 : action[0].rows();
  Module m = make_unchecked(std::move(a), side, d, std::move(action));
  m.validate();
  return m;
}

Module Module::make_unchecked(AlgebraPtr a, Side side, std::size_t dim,
                              std::vector<Matrix> action) {
  Module m;
  require(a != nullptr, Errc::ValidationError, "module needs an algebra");
  require(action.size() == a->dim(), Errc::DimensionMismatch,
          "need one action matrix per algebra basis element");
  for (const Matrix& mat : action) {
    require_same_field(mat.field(), a->field());
    require(mat.rows() == dim && mat.cols() == dim, Errc::DimensionMismatch,
            "action matrix shape");
  }
  m.algebra = std::move(a);
  m.side = side;
  m.dim = dim;
  m.action = std::move(action);
  return m;
}

Module Module::zero(AlgebraPtr a, Side side) {
  std::vector<Matrix> act(a->dim(), Matrix(a->field(), 0, 0));
  return make_unchecked(std::move(a), side, 0, std::move(act));
}

void Module::validate() const {
  AlgebraPtr e = effective();
  Matrix unit_act = action_of(e->unit());
  require(unit_act.is_identity(), Errc::ValidationError, "unit does not act as identity");
  // multiplicativity against a generating set implies it everywhere
  for (std::size_t g : e->generators()) {
    for (std::size_t b = 0; b < e->dim(); ++b) {
      Matrix lhs = action[g] * action[b];
      Matrix rhs = action_of(select_columns(e->left_mult()[g], {b}));
      require(lhs == rhs, Errc::ValidationError,
              "action is not multiplicative on generator " + std::to_string(g));
    }
  }
}

Module regular_module(const AlgebraPtr& a, Side side) {
  const AlgebraPtr e = side == Side::Left ? a : a->opposite();
  return Module::make_unchecked(a, side, a->dim(), e->left_mult());
}

ModuleHom ModuleHom::make(Module src, Module tgt, Matrix m) {
  ModuleHom h = make_unchecked(std::move(src), std::move(tgt), std::move(m));
  require(h.intertwines(), Errc::ValidationError, "matrix is not a module homomorphism");
  return h;
}

ModuleHom ModuleHom::make_unchecked(Module src, Module tgt, Matrix m) {
  require_compatible(src, tgt);
  require(m.rows() == tgt.dim && m.cols() == src.dim, Errc::DimensionMismatch,
          "hom matrix shape");
  return ModuleHom{std::move(src), std::move(tgt), std::move(m)};
}

bool ModuleHom::intertwines() const {
  AlgebraPtr e = source.effective();
  for (std::size_t g : e->generators())
    if (matrix * source.action[g] != target.action[g] * matrix) return false;
  return true;
}

void require_compatible(const Module& x, const Module& y) {
  require(x.algebra.get() == y.algebra.get(), Errc::AlgebraMismatch,
          "modules live over different algebras");
  require(x.side == y.side, Errc::AlgebraMismatch,
          std::string("modules have different sides (") + side_name(x.side) + " vs " +
              side_name(y.side) + ")");
}

std::vector<Matrix> hom_basis(const Module& x, const Module& y) {
  require_compatible(x, y);
  const FieldSpec f = x.field();
  const std::size_t dx = x.dim, dy = y.dim;
  if (dx == 0 || dy == 0) return {};
  AlgebraPtr e = x.effective();
  std::vector<Matrix> blocks;
  Matrix idy = Matrix::identity(f, dy), idx = Matrix::identity(f, dx);
  for (std::size_t g : e->generators())
    blocks.push_back(kron(idy, x.action[g].transpose()) - kron(y.action[g], idx));
  Matrix sys = vstack(blocks, f, dx * dy);
  Matrix k = kernel_basis(sys);
  std::vector<Matrix> out;
  for (std::size_t c = 0; c < k.cols(); ++c) out.push_back(unvec(k, dy, dx, f, c));
  return out;
}

std::size_t hom_dim(const Module& x, const Module& y) { return hom_basis(x, y).size(); }

Matrix flatten_homs(const std::vector<Matrix>& homs, std::size_t rows, std::size_t cols,
                    FieldSpec f) {
  Matrix out(f, rows * cols, homs.size());
  for (std::size_t t = 0; t < homs.size(); ++t) {
    Matrix v = vec_of(homs[t]);
    for (std::size_t r = 0; r < v.rows(); ++r) out.copy_entry(r, t, v, r, 0);
  }
  return out;
}

Matrix hom_coords(const std::vector<Matrix>& basis, const Matrix& h) {
  Matrix flat = flatten_homs(basis, h.rows(), h.cols(), h.field());
  auto c = solve(flat, vec_of(h));
  require(c.has_value(), Errc::Internal, "hom does not lie in the given hom space");
  return *c;
}

Matrix hom_from_coords(const std::vector<Matrix>& basis, const Matrix& coords,
                       std::size_t rows, std::size_t cols, FieldSpec f) {
  Matrix acc(f, rows, cols);
  for (std::size_t t = 0; t < basis.size(); ++t) {
    if (coords.entry_is_zero(t, 0)) continue;
    acc = acc + basis[t].scaled_by(coords, t, 0);
  }
  return acc;
}

DirectSum direct_sum(const AlgebraPtr& a, Side side, const std::vector<Module>& xs) {
  std::size_t total = 0;
  DirectSum out;
  for (const Module& x : xs) {
    require(x.algebra.get() == a.get(), Errc::AlgebraMismatch, "direct_sum algebra");
    require(x.side == side, Errc::AlgebraMismatch, "direct_sum side");
    out.ranges.push_back({total, x.dim});
    total += x.dim;
  }
  std::vector<Matrix> act(a->dim(), Matrix(a->field(), total, total));
  for (std::size_t k = 0; k < a->dim(); ++k)
    for (std::size_t t = 0; t < xs.size(); ++t) {
      auto [off, d] = out.ranges[t];
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          act[k].copy_entry(off + i, off + j, xs[t].action[k], i, j);
    }
  out.module = Module::make_unchecked(a, side, total, std::move(act));
  return out;
}

Matrix injection_matrix(const DirectSum& s, std::size_t i, FieldSpec f) {
  auto [off, d] = s.ranges[i];
  Matrix m(f, s.module.dim, d);
  for (std::size_t t = 0; t < d; ++t) m.set(off + t, t, 1);
  return m;
}

Matrix projection_matrix(const DirectSum& s, std::size_t i, FieldSpec f) {
  auto [off, d] = s.ranges[i];
  Matrix m(f, d, s.module.dim);
  for (std::size_t t = 0; t < d; ++t) m.set(t, off + t, 1);
  return m;
}

Module submodule_on(const Module& x, const Matrix& inclusion) {
  std::vector<Matrix> act;
  for (std::size_t k = 0; k < x.algebra->dim(); ++k) {
    auto sol = solve(inclusion, x.action[k] * inclusion);
    require(sol.has_value(), Errc::Internal, "subspace is not invariant under the action");
    act.push_back(std::move(*sol));
  }
  return Module::make_unchecked(x.algebra, x.side, inclusion.cols(), std::move(act));
}

Module quotient_on(const Module& x, const QuotientSpace& q) {
  std::vector<Matrix> act;
  for (std::size_t k = 0; k < x.algebra->dim(); ++k)
    act.push_back(q.proj * x.action[k] * q.section);
  return Module::make_unchecked(x.algebra, x.side, q.proj.rows(), std::move(act));
}

HomFactorization hom_factorization(const ModuleHom& h) {
  HomFactorization out;
  const Module& src = h.source;
  const Module& tgt = h.target;

  out.kernel_inclusion = kernel_basis(h.matrix);
  out.kernel = submodule_on(src, out.kernel_inclusion);

  ColumnSpace cs = column_space(h.matrix);
  out.image_inclusion = cs.basis;
  out.image = submodule_on(tgt, cs.basis);
  if (cs.basis.cols() == 0) {
    out.image_projection = Matrix(src.field(), 0, src.dim);
  } else {
    auto pr = solve(cs.basis, h.matrix);
    require(pr.has_value(), Errc::Internal, "image projection");
    out.image_projection = std::move(*pr);
  }

  QuotientSpace q = quotient_by_columns(cs.basis, tgt.dim);
  out.cokernel = quotient_on(tgt, q);
  out.cokernel_projection = std::move(q.proj);
  out.cokernel_section = std::move(q.section);

  require(out.kernel.dim + out.image.dim == src.dim, Errc::Internal, "rank-nullity");
  require(out.image.dim + out.cokernel.dim == tgt.dim, Errc::Internal, "corank");
  return out;
}

IsoResult is_isomorphic(const Module& x, const Module& y, std::size_t trials,
                        std::uint64_t seed) {
  require_compatible(x, y);
  if (x.dim != y.dim) return {IsoResult::V::No, std::nullopt};
  if (x.dim == 0) return {IsoResult::V::Yes, Matrix(x.field(), 0, 0)};
  std::vector<Matrix> homs = hom_basis(x, y);
  if (homs.empty()) return {IsoResult::V::No, std::nullopt};
  const std::size_t h = homs.size();
  const FieldSpec f = x.field();

  auto try_combo = [&](const std::vector<std::int64_t>& coeff) -> std::optional<Matrix> {
    Matrix cand(f, x.dim, x.dim);
    for (std::size_t t = 0; t < h; ++t) {
      if (coeff[t] == 0) continue;
      Matrix c(f, 1, 1);
      c.set(0, 0, coeff[t]);
      cand = cand + homs[t].scaled_by(c, 0, 0);
    }
    if (rank_of(cand) == x.dim) return cand;
    return std::nullopt;
  };

  if (f.is_prime()) {
    // exhaustive when the whole coefficient space is small enough to scan
    double total = 1;
    for (std::size_t t = 0; t < h && total <= 65536.0; ++t)
      total *= static_cast<double>(f.p);
    if (total <= 65536.0) {
      std::vector<std::int64_t> coeff(h, 0);
      for (;;) {
        std::size_t pos = 0;
        while (pos < h) {
          if (++coeff[pos] < f.p) break;
          coeff[pos++] = 0;
        }
        if (pos == h) break;
        if (auto w = try_combo(coeff)) return {IsoResult::V::Yes, std::move(w)};
      }
      return {IsoResult::V::No, std::nullopt};
    }
  }

  SeededRng rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<std::int64_t> coeff(h);
    for (std::size_t t = 0; t < h; ++t)
      coeff[t] = f.is_prime() ? static_cast<std::int64_t>(rng.below(f.p)) : rng.range(-4, 4);
    if (auto w = try_combo(coeff)) return {IsoResult::V::Yes, std::move(w)};
  }
  return {IsoResult::V::Unknown, std::nullopt};
}

const ProjectiveData& projective_data(const AlgebraPtr& e) {
  std::call_once(e->lazy_once[0], [&] {
    auto data = std::make_shared<ProjectiveData>();
    const std::size_t n = e->dim();
    const FieldSpec f = e->field();
    const Matrix& rad = e->radical();  // RadicalUnavailable propagates
    for (std::size_t i = 0; i < e->idempotents().size(); ++i) {
      Matrix re = e->right_mult_of(e->idempotents()[i]);
      Matrix incl = column_space(re).basis;
      std::vector<Matrix> act;
      for (std::size_t k = 0; k < n; ++k) {
        auto sol = solve(incl, e->left_mult()[k] * incl);
        require(sol.has_value(), Errc::Internal, "A*e_i is not left-invariant");
        act.push_back(std::move(*sol));
      }
      Module p = Module::make_unchecked(e, Side::Left, incl.cols(), std::move(act));

      // top of P_i: quotient by J * P_i inside P_i coordinates
      std::vector<Matrix> jp_cols;
      for (std::size_t r = 0; r < rad.cols(); ++r)
        jp_cols.push_back(p.action_of(select_columns(rad, {r})));
      Matrix jp = jp_cols.empty() ? Matrix(f, p.dim, 0)
                                  : column_space(hstack(jp_cols, f, p.dim)).basis;
      QuotientSpace q = quotient_by_columns(jp, p.dim);
      if (q.proj.rows() != 1)
        fail(Errc::NotBasic, "top of P_" + std::to_string(i + 1) + " has dimension " +
                                 std::to_string(q.proj.rows()) +
                                 "; this algebra is not basic with the given idempotents");
      data->simples.push_back(quotient_on(p, q));
      data->cover_maps.push_back(q.proj);
      data->projectives.push_back(std::move(p));
      data->incl.push_back(std::move(incl));
    }
    e->lazy_slot[0] = std::move(data);
  });
  return *static_cast<const ProjectiveData*>(e->lazy_slot[0].get());
}

SimplesProjectives simples_and_projectives(const AlgebraPtr& a, Side side) {
  AlgebraPtr e = side == Side::Left ? a : a->opposite();
  const ProjectiveData& d = projective_data(e);
  SimplesProjectives out;
  for (std::size_t i = 0; i < d.projectives.size(); ++i) {
    Module p = relabel(d.projectives[i], a, side);
    Module s = relabel(d.simples[i], a, side);
    out.covers.push_back(ModuleHom::make_unchecked(p, s, d.cover_maps[i]));
    out.projectives.push_back(std::move(p));
    out.simples.push_back(std::move(s));
  }
  return out;
}

Cover projective_cover(const Module& x) {
  AlgebraPtr e = x.effective();
  const ProjectiveData& data = projective_data(e);
  const FieldSpec f = x.field();
  const Matrix& rad = e->radical();

  // top(x) = x / Jx
  std::vector<Matrix> jx_cols;
  for (std::size_t r = 0; r < rad.cols(); ++r)
    jx_cols.push_back(x.action_of(select_columns(rad, {r})));
  Matrix jx = jx_cols.empty() ? Matrix(f, x.dim, 0)
                              : column_space(hstack(jx_cols, f, x.dim)).basis;
  QuotientSpace top = quotient_by_columns(jx, x.dim);

  Cover out;
  std::vector<Module> summands;
  std::vector<Matrix> phi_blocks;
  for (std::size_t i = 0; i < data.projectives.size(); ++i) {
    // e_i-component of the top gives the multiplicity of S_i
    Matrix top_ei = top.proj * x.action_of(e->idempotents()[i]) * top.section;
    ColumnSpace comp = column_space(top_ei);
    out.multiplicities.push_back(comp.pivots.size());
    for (std::size_t w = 0; w < comp.basis.cols(); ++w) {
      Matrix lift = top.section * select_columns(comp.basis, {w});
      Matrix y = x.action_of(e->idempotents()[i]) * lift;
      // P_i -> x, column c |-> act_x(coords of that basis vector) * y
      const Matrix& incl = data.incl[i];
      Matrix block(f, x.dim, incl.cols());
      for (std::size_t c = 0; c < incl.cols(); ++c) {
        Matrix col = x.action_of(select_columns(incl, {c})) * y;
        for (std::size_t r = 0; r < x.dim; ++r) block.copy_entry(r, c, col, r, 0);
      }
      summands.push_back(relabel(data.projectives[i], x.algebra, x.side));
      phi_blocks.push_back(std::move(block));
    }
  }
  DirectSum ds = direct_sum(x.algebra, x.side, summands);
  out.proj = std::move(ds.module);
  out.map = phi_blocks.empty() ? Matrix(f, x.dim, 0) : hstack(phi_blocks, f, x.dim);

  require(rank_of(out.map) == x.dim, Errc::Internal, "projective cover is not surjective");
  // superfluity: ker(map) lies in J * P
  Matrix ker = kernel_basis(out.map);
  std::vector<Matrix> jp_cols;
  for (std::size_t r = 0; r < rad.cols(); ++r)
    jp_cols.push_back(out.proj.action_of(select_columns(rad, {r})));
  Matrix jp = jp_cols.empty() ? Matrix(f, out.proj.dim, 0)
                              : column_space(hstack(jp_cols, f, out.proj.dim)).basis;
  require(columns_contained_in(ker, jp), Errc::Internal,
          "projective cover kernel is not superfluous");
  return out;
}

Module syzygy(const Module& x) {
  Cover c = projective_cover(x);
  return submodule_on(c.proj, kernel_basis(c.map));
}

bool is_projective_module(const Module& x) {
  if (x.dim == 0) return true;
  Cover c = projective_cover(x);
  return kernel_basis(c.map).cols() == 0;
}

Module dual_D(const Module& x) {
  std::vector<Matrix> act;
  for (const Matrix& m : x.action) act.push_back(m.transpose());
  return Module::make_unchecked(x.algebra, flip(x.side), x.dim, std::move(act));
}

Module star(const Module& x) {
  AlgebraPtr e = x.effective();
  Module reg = Module::make_unchecked(e, Side::Left, e->dim(), e->left_mult());
  Module xe = Module::make_unchecked(e, Side::Left, x.dim, x.action);
  std::vector<Matrix> homs = hom_basis(xe, reg);
  const std::size_t d = homs.size();
  const FieldSpec f = x.field();
  Matrix flat = flatten_homs(homs, e->dim(), x.dim, f);
  AlgebraPtr eop = e->opposite();
  std::vector<Matrix> act;
  for (std::size_t k = 0; k < e->dim(); ++k) {
    Matrix ak(f, d, d);
    for (std::size_t i = 0; i < d; ++i) {
      auto coords = solve(flat, vec_of(eop->left_mult()[k] * homs[i]));
      require(coords.has_value(), Errc::Internal, "star action leaves the hom space");
      for (std::size_t r = 0; r < d; ++r) ak.copy_entry(r, i, *coords, r, 0);
    }
    act.push_back(std::move(ak));
  }
  return Module::make_unchecked(x.algebra, flip(x.side), d, std::move(act));
}

Matrix star_map(const Module& src, const Module& tgt, const Matrix& f,
                const std::vector<Matrix>& star_src_basis,
                const std::vector<Matrix>& star_tgt_basis) {
  (void)tgt;
  const FieldSpec fld = src.field();
  AlgebraPtr e = src.effective();
  Matrix flat = flatten_homs(star_src_basis, e->dim(), src.dim, fld);
  Matrix out(fld, star_src_basis.size(), star_tgt_basis.size());
  for (std::size_t j = 0; j < star_tgt_basis.size(); ++j) {
    auto coords = solve(flat, vec_of(star_tgt_basis[j] * f));
    require(coords.has_value(), Errc::Internal, "star_map coordinates");
    for (std::size_t r = 0; r < out.rows(); ++r) out.copy_entry(r, j, *coords, r, 0);
  }
  return out;
}

Matrix double_dual_map(const Module& x, const Module& star_x,
                       const std::vector<Matrix>& star_basis, const Module& star_star_x,
                       const std::vector<Matrix>& star_star_basis) {
  const FieldSpec f = x.field();
  AlgebraPtr e = x.effective();
  (void)star_star_x;
  Matrix flat = flatten_homs(star_star_basis, e->dim(), star_x.dim, f);
  Matrix out(f, star_star_basis.size(), x.dim);
  for (std::size_t t = 0; t < x.dim; ++t) {
    // ev(e_t): star(x) -> regular, h_i |-> h_i(e_t)
    Matrix ev(f, e->dim(), star_x.dim);
    for (std::size_t i = 0; i < star_basis.size(); ++i)
      for (std::size_t r = 0; r < e->dim(); ++r) ev.copy_entry(r, i, star_basis[i], r, t);
    auto coords = solve(flat, vec_of(ev));
    require(coords.has_value(), Errc::Internal, "double dual map coordinates");
    for (std::size_t r = 0; r < out.rows(); ++r) out.copy_entry(r, t, *coords, r, 0);
  }
  return out;
}

TensorSpace tensor_space(const FdAlgebra& a, const std::vector<Matrix>& right_act,
                         std::size_t dy, const std::vector<Matrix>& left_act,
                         std::size_t dx) {
  const FieldSpec f = a.field();
  const std::size_t big = dy * dx;
  Matrix idy = Matrix::identity(f, dy), idx = Matrix::identity(f, dx);
  std::vector<Matrix> blocks;
  for (std::size_t g : a.generators())
    blocks.push_back(kron(right_act[g], idx) - kron(idy, left_act[g]));
  Matrix rel = blocks.empty() ? Matrix(f, big, 0)
                              : column_space(hstack(blocks, f, big)).basis;
  QuotientSpace q = quotient_by_columns(rel, big);
  return TensorSpace{q.proj.rows(), std::move(q.proj), std::move(q.section)};
}

Module random_module(const AlgebraPtr& a, Side side, SeededRng& rng,
                     std::size_t max_summands) {
  SimplesProjectives sp = simples_and_projectives(a, side);
  const std::size_t k = sp.projectives.size();
  std::vector<Module> tops, bots;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = rng.below(max_summands + 1); c > 0; --c)
      tops.push_back(sp.projectives[i]);
    for (std::size_t c = rng.below(max_summands + 1); c > 0; --c)
      bots.push_back(sp.projectives[i]);
  }
  if (tops.empty()) tops.push_back(sp.projectives[rng.below(k)]);
  DirectSum p = direct_sum(a, side, tops);
  DirectSum q = direct_sum(a, side, bots);
  std::vector<Matrix> homs = hom_basis(q.module, p.module);
  Matrix h(a->field(), p.module.dim, q.module.dim);
  for (const Matrix& b : homs) {
    Matrix c(a->field(), 1, 1);
    if (a->field().is_prime())
      c.set(0, 0, static_cast<std::int64_t>(rng.below(a->field().p)));
    else
      c.set(0, 0, rng.range(-3, 3));
    h = h + b.scaled_by(c, 0, 0);
  }
  QuotientSpace qs = quotient_by_columns(column_space(h).basis, p.module.dim);
  return quotient_on(p.module, qs);
}

}  // namespace tenring
