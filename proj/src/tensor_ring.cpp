#include "tenring/tensor_ring.hpp"

namespace tenring {

namespace {

Matrix vec_of(const Matrix& m) {
  Matrix v(m.field(), m.rows() * m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.copy_entry(i * m.cols() + j, 0, m, i, j);
  return v;
}

// F^g(u) for g = 0..N: u_maps[g] maps F^{g+1}(X) -> F^g(X)
std::vector<Matrix> f_iterates_of_u(const TensorRing& t, const RepPair& rp) {
  const std::size_t n = t.nilpotency();
  std::vector<Matrix> u_maps{rp.u};
  for (std::size_t g = 1; g <= n; ++g)
    u_maps.push_back(F_of_map(t, rp.tw(g + 1), rp.tw(g), u_maps[g - 1]));
  return u_maps;
}

// eta components: utilde[g] = u o F(u) o ... o F^{g-1}(u): F^g(X) -> X
std::vector<Matrix> eta_components(const TensorRing& t, const RepPair& rp,
                                   const std::vector<Matrix>& u_maps) {
  const std::size_t n = t.nilpotency();
  std::vector<Matrix> utilde{Matrix::identity(rp.base.field(), rp.base.dim)};
  for (std::size_t g = 1; g <= n; ++g) utilde.push_back(utilde[g - 1] * u_maps[g - 1]);
  return utilde;
}

// kappa[g]: P_g (x)_k X -> F^g(X) (the canonical comparison map)
std::vector<Matrix> kappa_maps(const TensorRing& t, const RepPair& rp) {
  const std::size_t n = t.nilpotency();
  const FieldSpec f = rp.base.field();
  const TensorTower& tw = *t.tower();
  std::vector<Matrix> kappa(n + 1, Matrix(f, 0, 0));
  Matrix idx = Matrix::identity(f, rp.base.dim);
  Matrix idm = Matrix::identity(f, tw.base_bimodule().dim);
  for (std::size_t g = 1; g <= n; ++g) {
    if (g == 1) {
      kappa[1] = rp.tw(1).space.proj;
    } else {
      kappa[g] = rp.tw(g).space.proj * kron(idm, kappa[g - 1]) *
                 kron(tw.step(g).section, idx);
    }
  }
  return kappa;
}

void check_rep_morphism(const TensorRing& t, const Module& src, const Module& tgt,
                        const Matrix& f, const char* what) {
  for (std::size_t g : t.algebra()->generators())
    require(f * src.action[g] == tgt.action[g] * f, Errc::Internal,
            std::string(what) + ": not a module homomorphism over the tensor ring");
}

}  // namespace

TensorRing TensorRing::build(const AlgebraPtr& r, const Bimodule& m, std::size_t cap) {
  require(m.left_algebra.get() == r.get() && m.right_algebra.get() == r.get(),
          Errc::AlgebraMismatch, "bimodule must be over the base algebra");
  TensorRing t;
  t.base_ = r;
  t.tower_ = std::make_shared<TensorTower>(m, cap);
  if (!t.tower_->nilpotency())
    fail(Errc::NotNilpotent,
         "bimodule is not nilpotent within cap " + std::to_string(cap));
  const std::size_t n = *t.tower_->nilpotency();
  t.nilpotency_ = n;
  const TensorTower& tw = *t.tower_;
  const FieldSpec f = r->field();

  std::size_t total = 0;
  for (std::size_t g = 0; g <= n; ++g) {
    t.ranges_.push_back({total, tw.power(g).dim});
    total += tw.power(g).dim;
  }

  std::vector<std::string> labels;
  for (std::size_t g = 0; g <= n; ++g)
    for (std::size_t s = 0; s < tw.power(g).dim; ++s)
      labels.push_back(g == 0 ? r->basis_labels()[s]
                              : "m" + std::to_string(g) + "_" + std::to_string(s));

  std::vector<Matrix> left(total, Matrix(f, total, total));
  for (std::size_t i = 0; i <= n; ++i) {
    const std::size_t di = tw.power(i).dim;
    for (std::size_t s = 0; s < di; ++s) {
      Matrix& l = left[t.basis_index(i, s)];
      for (std::size_t j = 0; i + j <= n && j <= n; ++j) {
        const std::size_t dj = tw.power(j).dim;
        const std::size_t dij = tw.power(i + j).dim;
        auto [off_j, sz_j] = t.ranges_[j];
        auto [off_ij, sz_ij] = t.ranges_[i + j];
        (void)sz_j;
        (void)sz_ij;
        if (dj == 0 || dij == 0) continue;
        if (i == 0) {
          const Matrix& block = tw.power(j).left_action[s];
          for (std::size_t rr = 0; rr < dij; ++rr)
            for (std::size_t cc = 0; cc < dj; ++cc)
              l.copy_entry(off_ij + rr, off_j + cc, block, rr, cc);
        } else if (j == 0) {
          for (std::size_t cc = 0; cc < dj; ++cc) {
            const Matrix& ract = tw.power(i).right_action[cc];
            for (std::size_t rr = 0; rr < dij; ++rr)
              l.copy_entry(off_ij + rr, off_j + cc, ract, rr, s);
          }
        } else {
          const Matrix& mu = tw.mu(i, j);
          for (std::size_t cc = 0; cc < dj; ++cc)
            for (std::size_t rr = 0; rr < dij; ++rr)
              l.copy_entry(off_ij + rr, off_j + cc, mu, rr, s * dj + cc);
        }
      }
    }
  }

  Matrix unit(f, total, 1);
  for (std::size_t k = 0; k < r->dim(); ++k) unit.copy_entry(k, 0, r->unit(), k, 0);
  std::vector<Matrix> idem;
  for (const Matrix& e : r->idempotents()) {
    Matrix ei(f, total, 1);
    for (std::size_t k = 0; k < r->dim(); ++k) ei.copy_entry(k, 0, e, k, 0);
    idem.push_back(std::move(ei));
  }

  // J(T) = J(R) + all positive grades
  std::vector<Matrix> rad_cols;
  const Matrix& rad_r = r->radical();
  for (std::size_t c = 0; c < rad_r.cols(); ++c) {
    Matrix col(f, total, 1);
    for (std::size_t k = 0; k < r->dim(); ++k) col.copy_entry(k, 0, rad_r, k, c);
    rad_cols.push_back(std::move(col));
  }
  for (std::size_t k = r->dim(); k < total; ++k)
    rad_cols.push_back(Matrix::basis_column(f, total, k));
  Matrix rad = rad_cols.empty() ? Matrix(f, total, 0) : hstack(rad_cols, f, total);

  std::vector<std::size_t> gens;
  for (std::size_t g : r->generators()) gens.push_back(g);
  for (std::size_t s = 0; s < tw.power(1).dim; ++s) gens.push_back(t.basis_index(1, s));

  t.algebra_ = FdAlgebra::create(f, std::move(labels), std::move(left), std::move(unit),
                                 std::move(idem), std::move(rad),
                                 AlgebraOrigin{AlgebraOrigin::Kind::Raw, std::nullopt},
                                 std::move(gens));

  // T as an (R, R)-bimodule through grade 0
  std::vector<Matrix> bi_left, bi_right;
  for (std::size_t k = 0; k < r->dim(); ++k) {
    std::size_t idx = t.basis_index(0, k);
    bi_left.push_back(t.algebra_->left_mult()[idx]);
    bi_right.push_back(
        t.algebra_->right_mult_of(Matrix::basis_column(f, total, idx)));
  }
  t.r_bimodule_ =
      Bimodule::make_unchecked(r, r, total, std::move(bi_left), std::move(bi_right));
  return t;
}

FInstance apply_F(const TensorRing& t, const Module& x) {
  TensoredModule tm = tensor_over_R(t.tower()->base_bimodule(), x);
  return FInstance{std::move(tm.module), std::move(tm.space)};
}

Matrix F_of_map(const TensorRing& t, const FInstance& fx, const FInstance& fy,
                const Matrix& f) {
  Matrix idm = Matrix::identity(f.field(), t.tower()->base_bimodule().dim);
  return fy.space.proj * kron(idm, f) * fx.space.section;
}

std::vector<FInstance> f_tower(const TensorRing& t, const Module& x) {
  require(x.algebra.get() == t.base().get() && x.side == Side::Left, Errc::AlgebraMismatch,
          "F applies to left modules over the base algebra");
  const FieldSpec f = x.field();
  std::vector<FInstance> tower;
  Matrix idx = Matrix::identity(f, x.dim);
  tower.push_back(FInstance{x, TensorSpace{x.dim, idx, idx}});
  for (std::size_t g = 1; g <= t.nilpotency() + 1; ++g)
    tower.push_back(apply_F(t, tower.back().module));
  require(tower.back().module.dim == 0, Errc::Internal,
          "F^{N+1} did not vanish on a module");
  return tower;
}

std::shared_ptr<const std::vector<FInstance>> shared_f_tower(const TensorRing& t,
                                                             const Module& x) {
  return std::make_shared<const std::vector<FInstance>>(f_tower(t, x));
}

RepPair make_rep_pair(const TensorRing& t, const Module& x, const Matrix& u) {
  RepPair rp;
  rp.tower = shared_f_tower(t, x);
  rp.base = x;
  require(u.rows() == x.dim && u.cols() == rp.tw(1).module.dim, Errc::DimensionMismatch,
          "structure map shape");
  // u must be an R-module map F(X) -> X
  for (std::size_t g : t.base()->generators())
    require(u * rp.tw(1).module.action[g] == x.action[g] * u, Errc::ValidationError,
            "structure map is not R-linear");
  rp.u = u;
  return rp;
}

Module rep_to_module(const TensorRing& t, const RepPair& rp) {
  const FieldSpec f = rp.base.field();
  const std::size_t n = t.nilpotency();
  std::vector<Matrix> u_maps = f_iterates_of_u(t, rp);
  std::vector<Matrix> utilde = eta_components(t, rp, u_maps);
  std::vector<Matrix> kappa = kappa_maps(t, rp);
  Matrix idx = Matrix::identity(f, rp.base.dim);

  std::vector<Matrix> act(t.algebra()->dim(), Matrix(f, rp.base.dim, rp.base.dim));
  for (std::size_t k = 0; k < t.base()->dim(); ++k) act[t.basis_index(0, k)] = rp.base.action[k];
  for (std::size_t g = 1; g <= n; ++g) {
    const std::size_t dg = t.tower()->power(g).dim;
    Matrix composite = utilde[g] * kappa[g];  // P_g (x) X -> X
    for (std::size_t s = 0; s < dg; ++s)
      act[t.basis_index(g, s)] =
          composite * kron(Matrix::basis_column(f, dg, s), idx);
  }
  return Module::make_unchecked(t.algebra(), Side::Left, rp.base.dim, std::move(act));
}

RepPair module_to_rep(const TensorRing& t, const Module& xt) {
  require(xt.algebra.get() == t.algebra().get() && xt.side == Side::Left,
          Errc::AlgebraMismatch, "expected a left module over the tensor ring");
  const FieldSpec f = xt.field();
  const std::size_t d = xt.dim;
  std::vector<Matrix> base_act;
  for (std::size_t k = 0; k < t.base()->dim(); ++k)
    base_act.push_back(xt.action[t.basis_index(0, k)]);
  Module x = Module::make_unchecked(t.base(), Side::Left, d, std::move(base_act));

  RepPair rp;
  rp.tower = shared_f_tower(t, x);
  rp.base = std::move(x);
  if (t.nilpotency() == 0) {
    rp.u = Matrix(f, d, 0);
    return rp;
  }
  const std::size_t dm = t.tower()->power(1).dim;
  Matrix b(f, d, dm * d);
  for (std::size_t s = 0; s < dm; ++s) {
    const Matrix& a = xt.action[t.basis_index(1, s)];
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t r = 0; r < d; ++r) b.copy_entry(r, s * d + c, a, r, c);
  }
  require(b == b * rp.tw(1).space.section * rp.tw(1).space.proj, Errc::ValidationError,
          "grade-1 action does not factor through M (x)_R X");
  rp.u = b * rp.tw(1).space.section;
  return rp;
}

Induced induce(const TensorRing& t, const Module& z) {
  const FieldSpec f = z.field();
  const std::size_t n = t.nilpotency();
  std::vector<FInstance> tower = f_tower(t, z);

  std::vector<Module> summands;
  for (std::size_t i = 0; i <= n; ++i) summands.push_back(tower[i].module);
  DirectSum ds = direct_sum(t.base(), Side::Left, summands);
  Module base = ds.module;
  FInstance fbs = apply_F(t, base);

  std::vector<Matrix> f_injs, next_injs;
  for (std::size_t i = 0; i <= n; ++i) {
    Matrix inj = injection_matrix(ds, i, f);
    f_injs.push_back(fbs.space.proj *
                     kron(Matrix::identity(f, t.tower()->base_bimodule().dim), inj) *
                     tower[i + 1].space.section);
    next_injs.push_back(i + 1 <= n ? injection_matrix(ds, i + 1, f)
                                   : Matrix(f, base.dim, 0));
  }
  Matrix phi = hstack(f_injs, f, fbs.module.dim);
  require(phi.rows() == phi.cols(), Errc::Internal, "F is not additive on the summands");
  auto psi = inverse(phi);
  require(psi.has_value(), Errc::Internal, "summand comparison map is singular");
  Matrix c_z = hstack(next_injs, f, base.dim) * *psi;

  Induced out;
  out.rep = make_rep_pair(t, base, c_z);
  out.t_module = rep_to_module(t, out.rep);
  out.summand_tower = std::move(tower);
  out.ranges = ds.ranges;
  out.unit_map = injection_matrix(ds, 0, f);
  return out;
}

Matrix induce_map(const TensorRing& t, const Induced& ia, const Induced& ib,
                  const Matrix& f) {
  const FieldSpec fl = f.field();
  const std::size_t n = t.nilpotency();
  Matrix out(fl, ib.rep.base.dim, ia.rep.base.dim);
  Matrix cur = f;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i > 0) cur = F_of_map(t, ia.summand_tower[i], ib.summand_tower[i], cur);
    auto [aoff, ad] = ia.ranges[i];
    auto [boff, bd] = ib.ranges[i];
    require(cur.rows() == bd && cur.cols() == ad, Errc::Internal, "induce_map shapes");
    for (std::size_t r = 0; r < bd; ++r)
      for (std::size_t c = 0; c < ad; ++c) out.copy_entry(boff + r, aoff + c, cur, r, c);
  }
  return out;
}

Module right_induce(const TensorRing& t, const Module& z) {
  require(z.algebra.get() == t.base().get() && z.side == Side::Right, Errc::AlgebraMismatch,
          "right induction applies to right modules over the base");
  const FieldSpec f = z.field();
  const std::size_t n = t.nilpotency();
  const TensorTower& tw = *t.tower();

  // gz[i] = z (x)_R M^{(x)i} built one step at a time
  std::vector<Module> gz{z};
  std::vector<TensorSpace> rstep{TensorSpace{}};
  for (std::size_t i = 1; i <= n + 1; ++i) {
    TensoredModule tm = tensor_right(gz.back(), tw.base_bimodule());
    gz.push_back(std::move(tm.module));
    rstep.push_back(std::move(tm.space));
  }
  require(gz[n + 1].dim == 0, Errc::Internal, "right tower did not vanish");

  std::vector<std::size_t> offs;
  std::size_t total = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    offs.push_back(total);
    total += gz[i].dim;
  }

  // kappa_r[i][g]: G^i (x) P_g -> G^{i+g}
  std::vector<std::vector<Matrix>> kap(n + 1, std::vector<Matrix>(n + 1, Matrix(f, 0, 0)));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t g = 1; i + g <= n; ++g) {
      if (g == 1) {
        kap[i][g] = rstep[i + 1].proj;
      } else {
        auto sigma = solve(tw.mu(g - 1, 1), Matrix::identity(f, tw.power(g).dim));
        require(sigma.has_value(), Errc::Internal, "mu(g-1,1) is not surjective");
        kap[i][g] = kap[i + g - 1][1] * kron(kap[i][g - 1], Matrix::identity(f, tw.power(1).dim)) *
                    kron(Matrix::identity(f, gz[i].dim), *sigma);
      }
    }

  std::vector<Matrix> act(t.algebra()->dim(), Matrix(f, total, total));
  for (std::size_t g = 0; g <= n; ++g) {
    const std::size_t dg = tw.power(g).dim;
    for (std::size_t s = 0; s < dg; ++s) {
      Matrix& a = act[t.basis_index(g, s)];
      for (std::size_t i = 0; i + g <= n; ++i) {
        Matrix block;
        if (g == 0) {
          block = gz[i].action[s];
        } else {
          block = kap[i][g] * kron(Matrix::identity(f, gz[i].dim),
                                   Matrix::basis_column(f, dg, s));
        }
        for (std::size_t r = 0; r < gz[i + g].dim; ++r)
          for (std::size_t c = 0; c < gz[i].dim; ++c)
            a.copy_entry(offs[i + g] + r, offs[i] + c, block, r, c);
      }
    }
  }
  return Module::make(t.algebra(), Side::Right, std::move(act));
}

StandardSequence standard_sequence(const TensorRing& t, const RepPair& x) {
  const FieldSpec f = x.base.field();
  const std::size_t n = t.nilpotency();

  StandardSequence seq;
  seq.x = x;
  seq.ind_x = induce(t, x.base);
  seq.ind_fx = induce(t, x.tw(1).module);

  std::vector<Matrix> u_maps = f_iterates_of_u(t, x);
  std::vector<Matrix> utilde = eta_components(t, x, u_maps);

  // phi: summand i of Ind(FX) is F^{i+1}(X); it maps by the identity into
  // summand i+1 of Ind(X) and by -F^i(u) into summand i
  Matrix phi(f, seq.ind_x.rep.base.dim, seq.ind_fx.rep.base.dim);
  for (std::size_t i = 0; i <= n; ++i) {
    auto [soff, sd] = seq.ind_fx.ranges[i];
    if (sd == 0) continue;
    if (i + 1 <= n) {
      auto [toff, td] = seq.ind_x.ranges[i + 1];
      require(td == sd, Errc::Internal, "standard sequence grading");
      for (std::size_t r = 0; r < sd; ++r) phi.set(toff + r, soff + r, 1);
    }
    auto [uoff, ud] = seq.ind_x.ranges[i];
    Matrix neg = -u_maps[i];
    for (std::size_t r = 0; r < ud; ++r)
      for (std::size_t c = 0; c < sd; ++c) phi.copy_entry(uoff + r, soff + c, neg, r, c);
  }
  seq.phi = std::move(phi);

  std::vector<Matrix> eta_blocks;
  for (std::size_t i = 0; i <= n; ++i) eta_blocks.push_back(utilde[i]);
  seq.eta = hstack(eta_blocks, f, x.base.dim);

  // exactness and T-linearity
  require(kernel_basis(seq.phi).cols() == 0, Errc::Internal, "phi is not injective");
  require(homology_dim(seq.phi, seq.eta) == 0, Errc::Internal,
          "standard sequence not exact in the middle");
  require(rank_of(seq.eta) == x.base.dim, Errc::Internal, "eta is not surjective");
  Module src = seq.ind_fx.t_module;
  Module mid = seq.ind_x.t_module;
  Module tgt = rep_to_module(t, x);
  check_rep_morphism(t, src, mid, seq.phi, "phi");
  check_rep_morphism(t, mid, tgt, seq.eta, "eta");
  return seq;
}

SplitMonoResult split_mono_normal_form(const TensorRing& t, const RepPair& x) {
  const FieldSpec f = x.base.field();
  if (kernel_basis(x.u).cols() != 0) return {SplitMonoResult::V::NotInduced, {}, {}};

  QuotientSpace q = quotient_by_columns(column_space(x.u).basis, x.base.dim);
  Module a = quotient_on(x.base, q);

  // a module-map section of the cokernel projection: an exact linear problem
  std::vector<Matrix> homs = hom_basis(a, x.base);
  std::vector<Matrix> images;
  for (const Matrix& h : homs) images.push_back(q.proj * h);
  Matrix lhs = flatten_homs(images, a.dim, a.dim, f);
  auto coeff = solve(lhs, vec_of(Matrix::identity(f, a.dim)));
  if (!coeff) return {SplitMonoResult::V::NotInduced, {}, {}};
  Matrix iota = hom_from_coords(homs, *coeff, x.base.dim, a.dim, f);

  Induced ind_a = induce(t, a);
  std::vector<Matrix> u_maps = f_iterates_of_u(t, x);
  std::vector<Matrix> utilde = eta_components(t, x, u_maps);

  std::vector<Matrix> blocks;
  Matrix fi = iota;  // F^i(iota): F^i(A) -> F^i(X)
  for (std::size_t i = 0; i <= t.nilpotency(); ++i) {
    if (i > 0) fi = F_of_map(t, ind_a.summand_tower[i], x.tw(i), fi);
    blocks.push_back(utilde[i] * fi);
  }
  Matrix theta = hstack(blocks, f, x.base.dim);
  require(theta.rows() == theta.cols(), Errc::Internal, "normal form dimensions");
  require(rank_of(theta) == theta.rows(), Errc::Internal,
          "normal form comparison map is singular");

  // morphism condition theta o c_A = u o F(theta)
  Matrix f_theta = F_of_map(t, ind_a.rep.tw(1), x.tw(1), theta);
  require(theta * ind_a.rep.u == x.u * f_theta, Errc::Internal,
          "normal form is not a morphism of representations");
  return {SplitMonoResult::V::Induced, std::move(a), std::move(theta)};
}

}  // namespace tenring
