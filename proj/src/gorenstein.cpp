#include "tenring/gorenstein.hpp"

namespace tenring {

namespace {

Matrix vec_of(const Matrix& m) {
  Matrix v(m.field(), m.rows() * m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.copy_entry(i * m.cols() + j, 0, m, i, j);
  return v;
}

struct StarData {
  Module module;
  std::vector<Matrix> basis;
};

StarData star_with_basis(const Module& x) {
  AlgebraPtr e = x.effective();
  Module reg = Module::make_unchecked(e, Side::Left, e->dim(), e->left_mult());
  Module xe = Module::make_unchecked(e, Side::Left, x.dim, x.action);
  StarData out{star(x), hom_basis(xe, reg)};
  return out;
}

// the i-range of Tor_i(Y, -) or Tor_i(-, X) that certifies all higher
// vanishing, from a pd verdict of the resolved argument
std::optional<std::size_t> certified_tor_range(const HomDimVerdict& pd) {
  if (pd.is_finite()) return pd.n;
  if (pd.is_infinite_certified()) return pd.witness_j;  // periodicity covers the rest
  return std::nullopt;
}

}  // namespace

const char* gp_verdict_name(GpVerdict v) {
  switch (v) {
    case GpVerdict::GP: return "GP";
    case GpVerdict::NotGP: return "NotGP";
    case GpVerdict::Unknown: return "Unknown";
  }
  return "?";
}

const char* gmon_verdict_name(GmonVerdict v) {
  switch (v) {
    case GmonVerdict::InGmon: return "InGmon";
    case GmonVerdict::NotInGmon: return "NotInGmon";
    case GmonVerdict::Unknown: return "Unknown";
  }
  return "?";
}

HomDimVerdict injective_dimension(const AlgebraPtr& a, Side side,
                                  const HomologyOptions& opt) {
  return pd_verdict(dual_D(regular_module(a, side)), opt);
}

GorensteinContext gorenstein_context(const AlgebraPtr& a, const HomologyOptions& opt) {
  GorensteinContext ctx;
  ctx.algebra = a;
  ctx.left_id = injective_dimension(a, Side::Left, opt);
  ctx.right_id = injective_dimension(a, Side::Right, opt);
  if (ctx.left_id.is_finite() && ctx.right_id.is_finite()) {
    require(ctx.left_id.n == ctx.right_id.n, Errc::Internal,
            "one-sided self-injective dimensions disagree");
    ctx.gdim = ctx.left_id;
  } else if (ctx.left_id.is_infinite_certified()) {
    ctx.gdim = ctx.left_id;
  } else if (ctx.right_id.is_infinite_certified()) {
    ctx.gdim = ctx.right_id;
  } else {
    ctx.gdim = HomDimVerdict::at_least(opt.pd_bound);
  }
  return ctx;
}

HomDimVerdict global_dimension(const AlgebraPtr& a, const HomologyOptions& opt) {
  std::size_t best = 0;
  bool capped = false;
  for (const Module& s : simples_and_projectives(a).simples) {
    HomDimVerdict v = pd_verdict(s, opt);
    if (v.is_infinite_certified()) return v;
    if (v.is_inconclusive())
      capped = true;
    else
      best = std::max(best, v.n);
  }
  return capped ? HomDimVerdict::at_least(opt.pd_bound) : HomDimVerdict::finite(best);
}

GpVerdict gp_test(const Module& x, const GorensteinContext& ctx,
                  const HomologyOptions& opt) {
  require(x.algebra.get() == ctx.algebra.get(), Errc::AlgebraMismatch,
          "module and context algebras differ");
  if (x.dim == 0) return GpVerdict::GP;
  Module reg = regular_module(x.algebra, x.side);
  if (auto d = ctx.certified()) {
    // over a d-Gorenstein algebra: GP iff Ext^{1..d}(x, R) = 0
    for (std::size_t i = 1; i <= *d; ++i)
      if (ext_dim(x, reg, i) != 0) return GpVerdict::NotGP;
    return GpVerdict::GP;
  }
  // bounded totally-reflexive test
  for (std::size_t i = 1; i <= opt.pd_bound; ++i)
    if (ext_dim(x, reg, i) != 0) return GpVerdict::NotGP;
  StarData sx = star_with_basis(x);
  Module reg_op = regular_module(x.algebra, flip(x.side));
  for (std::size_t i = 1; i <= opt.pd_bound; ++i)
    if (ext_dim(sx.module, reg_op, i) != 0) return GpVerdict::NotGP;
  StarData ssx = star_with_basis(sx.module);
  if (ssx.module.dim != x.dim) return GpVerdict::NotGP;
  Matrix ev = double_dual_map(x, sx.module, sx.basis, ssx.module, ssx.basis);
  if (rank_of(ev) != x.dim) return GpVerdict::NotGP;
  return GpVerdict::Unknown;
}

HomDimVerdict gpd(const Module& x, const GorensteinContext& ctx,
                  const HomologyOptions& opt) {
  std::size_t limit = ctx.certified().value_or(opt.pd_bound);
  Module omega = x;
  for (std::size_t n = 0; n <= limit; ++n) {
    GpVerdict v = gp_test(omega, ctx, opt);
    if (v == GpVerdict::Unknown)
      fail(Errc::Inconclusive, "Gorenstein projectivity undecided at syzygy " +
                                   std::to_string(n));
    if (v == GpVerdict::GP) return HomDimVerdict::finite(n);
    require(!ctx.certified() || n < *ctx.certified(), Errc::Internal,
            "Gpd exceeded the certified Gorenstein dimension");
    omega = syzygy(omega);
  }
  return HomDimVerdict::at_least(limit);
}

ResolutionSegment gp_coresolution(const Module& g, const GorensteinContext& ctx,
                                  std::size_t n, const HomologyOptions& opt) {
  if (gp_test(g, ctx, opt) != GpVerdict::GP)
    fail(Errc::NotGorensteinProjective, "coresolution input is not Gorenstein projective");

  StarData sg = star_with_basis(g);
  StarData ssg = star_with_basis(sg.module);
  Matrix ev = double_dual_map(g, sg.module, sg.basis, ssg.module, ssg.basis);
  require(rank_of(ev) == g.dim && ssg.module.dim == g.dim, Errc::Internal,
          "Gorenstein projective module is not reflexive");

  ResolutionSegment res = projective_resolution(sg.module, n);
  std::vector<StarData> sp;
  for (const Module& p : res.modules) sp.push_back(star_with_basis(p));

  ResolutionSegment out;
  out.forward = true;
  out.target = g;
  for (const StarData& s : sp) out.modules.push_back(s.module);
  // star of the augmentation P^0 ->> star(g), precomposed with evaluation
  Matrix embed = star_map(res.modules[0], sg.module, res.augmentation, sp[0].basis,
                          ssg.basis) *
                 ev;
  out.augmentation = embed;
  for (std::size_t i = 1; i <= n; ++i)
    out.differentials.push_back(star_map(res.modules[i], res.modules[i - 1],
                                         res.differentials[i - 1], sp[i].basis,
                                         sp[i - 1].basis));

  // verify: injective start, exactness, projective terms, GP cosyzygies
  require(kernel_basis(out.augmentation).cols() == 0, Errc::Internal,
          "coresolution does not embed the module");
  if (n >= 1)
    require(homology_dim(out.augmentation, out.differentials[0]) == 0, Errc::Internal,
            "coresolution not exact at P^0");
  for (std::size_t i = 1; i < n; ++i)
    require(homology_dim(out.differentials[i - 1], out.differentials[i]) == 0,
            Errc::Internal, "coresolution not exact at an interior term");
  for (const Module& p : out.modules)
    require(is_projective_module(p), Errc::Internal, "coresolution term is not projective");
  // cosyzygies: cokernel of the embedding, then of each differential
  {
    ModuleHom em = ModuleHom::make_unchecked(g, out.modules[0], out.augmentation);
    HomFactorization hf = hom_factorization(em);
    require(gp_test(hf.cokernel, ctx, opt) == GpVerdict::GP, Errc::Internal,
            "cosyzygy is not Gorenstein projective");
    for (std::size_t i = 1; i <= n; ++i) {
      ModuleHom d = ModuleHom::make_unchecked(out.modules[i - 1], out.modules[i],
                                              out.differentials[i - 1]);
      HomFactorization df = hom_factorization(d);
      require(gp_test(df.cokernel, ctx, opt) == GpVerdict::GP, Errc::Internal,
              "cosyzygy is not Gorenstein projective");
    }
  }
  return out;
}

CmFreeResult cm_free_scan(const AlgebraPtr& a, const GorensteinContext& ctx,
                          std::size_t dim_cap, const HomologyOptions& opt) {
  require(ctx.certified().has_value(), Errc::Inconclusive,
          "CM-freeness scan needs a certified Gorenstein context");
  CmFreeResult out;
  out.dim_cap = dim_cap;
  auto consider = [&](const Module& x) -> bool {
    if (x.dim == 0 || is_projective_module(x)) return false;
    if (gp_test(x, ctx, opt) == GpVerdict::GP) {
      out.witness = x;
      return true;
    }
    return false;
  };
  if (a->field().is_prime()) {
    EnumerationOptions eopt;
    eopt.dim_cap = dim_cap;
    eopt.iso_trials = opt.iso_trials;
    eopt.seed = opt.seed;
    for (const Module& x : enumerate_modules(a, Side::Left, eopt))
      if (consider(x)) return out;
  } else {
    // rational sampling: simples, their syzygy orbits, and random cokernels
    SeededRng rng(opt.seed);
    std::vector<Module> samples;
    for (const Module& s : simples_and_projectives(a).simples) {
      samples.push_back(s);
      Module omega = s;
      for (int step = 0; step < 4; ++step) {
        omega = syzygy(omega);
        if (omega.dim == 0 || omega.dim > dim_cap) break;
        samples.push_back(omega);
      }
    }
    for (int trial = 0; trial < 24; ++trial) {
      Module x = random_module(a, Side::Left, rng);
      if (x.dim <= dim_cap) samples.push_back(x);
    }
    for (const Module& x : samples)
      if (consider(x)) return out;
  }
  out.cm_free = true;
  return out;
}

GmonResult gmon_test(const TensorRing& t, const RepPair& x, const GorensteinContext& ctx_r,
                     const HomologyOptions& opt) {
  (void)t;
  if (kernel_basis(x.u).cols() != 0)
    return {GmonVerdict::NotInGmon, "structure map is not injective"};
  QuotientSpace q = quotient_by_columns(column_space(x.u).basis, x.base.dim);
  Module coker = quotient_on(x.base, q);
  switch (gp_test(coker, ctx_r, opt)) {
    case GpVerdict::GP:
      return {GmonVerdict::InGmon, ""};
    case GpVerdict::NotGP:
      return {GmonVerdict::NotInGmon, "cokernel of the structure map is not GP"};
    case GpVerdict::Unknown:
    default:
      return {GmonVerdict::Unknown, "cokernel GP status undecided"};
  }
}

GmonResult gmon_test(const TensorRing& t, const Module& x_over_t,
                     const GorensteinContext& ctx_r, const HomologyOptions& opt) {
  return gmon_test(t, module_to_rep(t, x_over_t), ctx_r, opt);
}

MFlatResult m_flat_test(const TensorTower& tower, const Module& y,
                        const HomologyOptions& opt) {
  require(tower.nilpotency().has_value(), Errc::NotNilpotent,
          "M-flatness needs a nilpotent bimodule");
  require(y.side == Side::Left, Errc::AlgebraMismatch, "M-flatness applies to left modules");
  const std::size_t n = *tower.nilpotency();
  bool capped = false;
  for (std::size_t s = 1; s <= n; ++s) {
    Module pow_right = tower.power(s).as_right_module();
    if (pow_right.dim == 0) continue;
    HomDimVerdict pd = pd_verdict(pow_right, opt);
    auto range = certified_tor_range(pd);
    std::size_t hi = range.value_or(opt.pd_bound);
    if (!range) capped = true;
    for (std::size_t i = 1; i <= hi; ++i)
      if (tor_dim(pow_right, y, i) != 0)
        return {MFlatResult::V::NotMFlat, i, s};
  }
  return {capped ? MFlatResult::V::Unknown : MFlatResult::V::MFlat, 0, 0};
}

PerfectReport perfect_test(const TensorTower& tower, const HomologyOptions& opt) {
  require(tower.nilpotency().has_value(), Errc::NotNilpotent,
          "perfectness is defined for nilpotent bimodules");
  const std::size_t n = *tower.nilpotency();
  PerfectReport rep;
  const Bimodule& m = tower.base_bimodule();
  if (m.dim == 0) {
    rep.pd_left = rep.pd_right = HomDimVerdict::finite(0);
    rep.condition_p = PerfectReport::P::Pass;
    rep.symmetric_agrees = true;
    rep.perfect = PerfectReport::V::Yes;
    return rep;
  }
  Module m_left = m.as_left_module();
  Module m_right = m.as_right_module();
  rep.pd_left = pd_verdict(m_left, opt);
  rep.pd_right = pd_verdict(m_right, opt);

  // condition (P): Tor_i(M, M^{(x)j}) = 0; i ranges over a certified window
  bool capped = false;
  auto mrange = certified_tor_range(rep.pd_right);
  rep.condition_p = PerfectReport::P::Pass;
  for (std::size_t j = 1; j <= n && rep.condition_p == PerfectReport::P::Pass; ++j) {
    Module pow_left = tower.power(j).as_left_module();
    if (pow_left.dim == 0) continue;
    std::optional<std::size_t> range = mrange;
    if (!range) range = certified_tor_range(pd_verdict(pow_left, opt));
    std::size_t hi = range.value_or(opt.pd_bound);
    if (!range) capped = true;
    for (std::size_t i = 1; i <= hi; ++i)
      if (tor_dim(m_right, pow_left, i) != 0) {
        rep.condition_p = PerfectReport::P::Fail;
        rep.witness_i = i;
        rep.witness_j = j;
        break;
      }
  }
  if (rep.condition_p == PerfectReport::P::Pass && capped)
    rep.condition_p = PerfectReport::P::Unknown;

  // the symmetric reformulation: Tor_i(M^{(x)s}, M) = 0
  bool sym_fail = false, sym_capped = false;
  auto lrange = certified_tor_range(rep.pd_left);
  for (std::size_t s = 1; s <= n && !sym_fail; ++s) {
    Module pow_right = tower.power(s).as_right_module();
    if (pow_right.dim == 0) continue;
    std::optional<std::size_t> range = lrange;
    if (!range) range = certified_tor_range(pd_verdict(pow_right, opt));
    std::size_t hi = range.value_or(opt.pd_bound);
    if (!range) sym_capped = true;
    for (std::size_t i = 1; i <= hi; ++i)
      if (tor_dim(pow_right, m_left, i) != 0) {
        sym_fail = true;
        break;
      }
  }
  PerfectReport::P sym = sym_fail ? PerfectReport::P::Fail
                       : sym_capped ? PerfectReport::P::Unknown
                                    : PerfectReport::P::Pass;
  rep.symmetric_agrees = (sym == rep.condition_p) ||
                         (sym == PerfectReport::P::Unknown ||
                          rep.condition_p == PerfectReport::P::Unknown);

  bool pds_finite = rep.pd_left.is_finite() && rep.pd_right.is_finite();
  bool pd_infinite =
      rep.pd_left.is_infinite_certified() || rep.pd_right.is_infinite_certified();
  if (pds_finite && rep.condition_p == PerfectReport::P::Pass)
    rep.perfect = PerfectReport::V::Yes;
  else if (pd_infinite || rep.condition_p == PerfectReport::P::Fail)
    rep.perfect = PerfectReport::V::No;
  else
    rep.perfect = PerfectReport::V::Unknown;
  return rep;
}

AdmissibleReport admissible_report(const TensorRing& t,
                                   const std::vector<Module>& left_family,
                                   const std::vector<Module>& right_family,
                                   const HomologyOptions& opt) {
  const TensorTower& tower = *t.tower();
  require(tower.nilpotency().has_value(), Errc::NotNilpotent,
          "admissibility is defined for nilpotent bimodules");
  const std::size_t n = *tower.nilpotency();
  AdmissibleReport rep;
  rep.perfect = perfect_test(tower, opt);
  rep.via_perfect = rep.perfect.perfect == PerfectReport::V::Yes;
  const Bimodule& m = tower.base_bimodule();
  Module m_left = m.as_left_module(), m_right = m.as_right_module();

  for (std::size_t gi = 0; gi < left_family.size(); ++gi) {
    const Module& g = left_family[gi];
    for (std::size_t i = 0; i <= n; ++i) {
      const Bimodule& pow = tower.power(i);
      if (ext_dim(g, pow.as_left_module(), 1) != 0) {
        rep.left_ok = false;
        rep.failures.push_back({Side::Left, gi, i, "ext"});
      }
      if (m.dim != 0) {
        Module mg = tensor_over_R(pow, g).module;
        if (mg.dim != 0 && tor_dim(m_right, mg, 1) != 0) {
          rep.left_ok = false;
          rep.failures.push_back({Side::Left, gi, i, "tor"});
        }
      }
    }
  }
  for (std::size_t gi = 0; gi < right_family.size(); ++gi) {
    const Module& g = right_family[gi];
    for (std::size_t i = 0; i <= n; ++i) {
      const Bimodule& pow = tower.power(i);
      if (ext_dim(g, pow.as_right_module(), 1) != 0) {
        rep.right_ok = false;
        rep.failures.push_back({Side::Right, gi, i, "ext"});
      }
      if (m.dim != 0) {
        Module gm = tensor_right(g, pow).module;
        if (gm.dim != 0 && tor_dim(gm, m_left, 1) != 0) {
          rep.right_ok = false;
          rep.failures.push_back({Side::Right, gi, i, "tor"});
        }
      }
    }
  }
  return rep;
}

FrobeniusEmbedding frobenius_embedding(const TensorRing& t, const RepPair& x,
                                       const GorensteinContext& ctx_r,
                                       const HomologyOptions& opt) {
  GmonResult gm = gmon_test(t, x, ctx_r, opt);
  if (gm.verdict != GmonVerdict::InGmon)
    fail(Errc::NotInGmon, "embedding input: " + gm.reason);
  const FieldSpec f = x.base.field();
  const std::size_t n = t.nilpotency();

  QuotientSpace q = quotient_by_columns(column_space(x.u).basis, x.base.dim);
  Module coker = quotient_on(x.base, q);

  // a mono coker -> P with Gorenstein projective cokernel
  ResolutionSegment cores = gp_coresolution(coker, ctx_r, 1, opt);
  const Module& p = cores.modules[0];
  Matrix a0 = cores.augmentation * q.proj;  // X -> P = F^0(P)

  Induced ind_p = induce(t, p);
  std::vector<Matrix> blocks{a0};
  for (std::size_t i = 1; i <= n; ++i) {
    // solve a_i o u = F(a_{i-1}) inside Hom_R(X, F^i(P))
    Matrix rhs = F_of_map(t, x.tw(1), ind_p.summand_tower[i], blocks[i - 1]);
    const Module& fip = ind_p.summand_tower[i].module;
    std::vector<Matrix> homs = hom_basis(x.base, fip);
    std::vector<Matrix> images;
    for (const Matrix& h : homs) images.push_back(h * x.u);
    Matrix lhs = flatten_homs(images, fip.dim, x.tw(1).module.dim, f);
    auto coeff = solve(lhs, vec_of(rhs));
    if (!coeff)
      fail(Errc::SolveFailed,
           "no lift at grade " + std::to_string(i) + "; hypothesis violated or bug");
    blocks.push_back(hom_from_coords(homs, *coeff, fip.dim, x.base.dim, f));
  }

  Matrix embedding(f, ind_p.rep.base.dim, x.base.dim);
  for (std::size_t i = 0; i <= n; ++i) {
    auto [off, d] = ind_p.ranges[i];
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < x.base.dim; ++c)
        embedding.copy_entry(off + r, c, blocks[i], r, c);
  }

  require(kernel_basis(embedding).cols() == 0, Errc::Internal,
          "joint kernel of the embedding components is nonzero");
  Module xt = rep_to_module(t, x);
  for (std::size_t g : t.algebra()->generators())
    require(embedding * xt.action[g] == ind_p.t_module.action[g] * embedding,
            Errc::Internal, "embedding is not T-linear");

  QuotientSpace qc = quotient_by_columns(column_space(embedding).basis,
                                         ind_p.t_module.dim);
  Module coker_t = quotient_on(ind_p.t_module, qc);
  RepPair coker_rep = module_to_rep(t, coker_t);
  GmonResult cg = gmon_test(t, coker_rep, ctx_r, opt);
  require(cg.verdict == GmonVerdict::InGmon, Errc::Internal,
          "cokernel of the embedding left the monomorphism category");

  return FrobeniusEmbedding{std::move(embedding), std::move(ind_p), std::move(coker_rep)};
}

}  // namespace tenring
