#include <doctest.h>

#include "fixtures.hpp"
#include "tenring/gorenstein.hpp"

using namespace tenring;

namespace {
const FieldSpec QQ = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

HomologyOptions opts(std::uint64_t seed = 17) {
  HomologyOptions o;
  o.seed = seed;
  return o;
}

struct PaperRing {
  AlgebraPtr a = build_from_quiver(fixtures::three_cycle(), F2);
  SimplesProjectives left = simples_and_projectives(a);
  SimplesProjectives right = simples_and_projectives(a, Side::Right);
  Bimodule m = outer_tensor(left.projectives[0], right.projectives[2]);
  TensorRing t = TensorRing::build(a, m, 16);
  GorensteinContext ctx = gorenstein_context(a, opts());
};
}  // namespace

TEST_CASE("injective dimensions of the battery algebras") {
  auto a3 = build_from_quiver(fixtures::three_cycle(), F2);
  CHECK(injective_dimension(a3, Side::Left, opts()) == HomDimVerdict::finite(0));
  CHECK(injective_dimension(a3, Side::Right, opts()) == HomDimVerdict::finite(0));

  auto a2 = build_from_quiver(fixtures::a2_quiver(), QQ);
  CHECK(injective_dimension(a2, Side::Left, opts()) == HomDimVerdict::finite(1));

  auto kx = build_from_quiver(fixtures::loop_x2(), QQ);
  CHECK(injective_dimension(kx, Side::Left, opts()) == HomDimVerdict::finite(0));
}

TEST_CASE("Gorenstein contexts") {
  PaperRing pr;
  CHECK(pr.ctx.gdim == HomDimVerdict::finite(0));

  GorensteinContext ctx_t = gorenstein_context(pr.t.algebra(), opts());
  REQUIRE(ctx_t.gdim.is_finite());
  CHECK(ctx_t.gdim.n <= 1);  // the tensor ring is 1-Gorenstein
  CHECK(ctx_t.gdim.n == 1);  // and not self-injective: exact value

  auto a2 = build_from_quiver(fixtures::a2_quiver(), QQ);
  CHECK(gorenstein_context(a2, opts()).gdim == HomDimVerdict::finite(1));
}

TEST_CASE("gp_test over a quasi-Frobenius base accepts everything") {
  PaperRing pr;
  for (const Module& x : pr.left.simples) CHECK(gp_test(x, pr.ctx, opts()) == GpVerdict::GP);
  SeededRng rng(33);
  for (int i = 0; i < 4; ++i)
    CHECK(gp_test(random_module(pr.a, Side::Left, rng), pr.ctx, opts()) == GpVerdict::GP);
}

TEST_CASE("gp_test over the hereditary A2 quiver: only projectives") {
  auto a2 = build_from_quiver(fixtures::a2_quiver(), QQ);
  GorensteinContext ctx = gorenstein_context(a2, opts());
  auto sp = simples_and_projectives(a2);
  CHECK(gp_test(sp.simples[0], ctx, opts()) == GpVerdict::NotGP);
  CHECK(gp_test(sp.projectives[0], ctx, opts()) == GpVerdict::GP);
  CHECK(gp_test(sp.projectives[1], ctx, opts()) == GpVerdict::GP);
}

TEST_CASE("Gpd values") {
  PaperRing pr;
  CHECK(gpd(pr.left.simples[0], pr.ctx, opts()) == HomDimVerdict::finite(0));

  auto a2 = build_from_quiver(fixtures::a2_quiver(), QQ);
  GorensteinContext ctx2 = gorenstein_context(a2, opts());
  auto sp2 = simples_and_projectives(a2);
  CHECK(gpd(sp2.simples[0], ctx2, opts()) == HomDimVerdict::finite(1));
  CHECK(gpd(sp2.projectives[0], ctx2, opts()) == HomDimVerdict::finite(0));
}

TEST_CASE("gp coresolutions over the three-cycle algebra") {
  PaperRing pr;
  Module s1 = pr.left.simples[0];
  ResolutionSegment cores = gp_coresolution(s1, pr.ctx, 3, opts());
  // soc P3 = S1: the first injective-ish term is P3 and the cosyzygy is S3
  CHECK(cores.modules[0].dim == 2);
  CHECK(is_isomorphic(cores.modules[0], pr.left.projectives[2], 8, 1).yes());
  ModuleHom em = ModuleHom::make(s1, cores.modules[0], cores.augmentation);
  HomFactorization hf = hom_factorization(em);
  CHECK(is_isomorphic(hf.cokernel, pr.left.simples[2], 8, 2).yes());

  // a projective coresolves as 0 -> P -> P -> 0
  ResolutionSegment cp = gp_coresolution(pr.left.projectives[0], pr.ctx, 1, opts());
  CHECK(cp.modules[0].dim == 2);
  CHECK(rank_of(cp.augmentation) == 2);

  // cosyzygy orbit of S1 is periodic with period 3: cosyzygies S3, S2, S1
  ResolutionSegment orbit = gp_coresolution(s1, pr.ctx, 2, opts());
  ModuleHom d1 = ModuleHom::make_unchecked(orbit.modules[0], orbit.modules[1],
                                           orbit.differentials[0]);
  HomFactorization f1 = hom_factorization(d1);
  CHECK(is_isomorphic(f1.cokernel, pr.left.simples[1], 8, 3).yes());
  ModuleHom d2 = ModuleHom::make_unchecked(orbit.modules[1], orbit.modules[2],
                                           orbit.differentials[1]);
  HomFactorization f2 = hom_factorization(d2);
  CHECK(is_isomorphic(f2.cokernel, pr.left.simples[0], 8, 4).yes());
}

TEST_CASE("gp_coresolution rejects non-GP input") {
  auto a2 = build_from_quiver(fixtures::a2_quiver(), QQ);
  GorensteinContext ctx = gorenstein_context(a2, opts());
  auto sp = simples_and_projectives(a2);
  CHECK_THROWS_WITH_AS((void)gp_coresolution(sp.simples[0], ctx, 1, opts()),
                       doctest::Contains("NotGorensteinProjective"), Error);
}

TEST_CASE("CM-freeness scans") {
  PaperRing pr;
  CmFreeResult r3 = cm_free_scan(pr.a, pr.ctx, 3, opts());
  REQUIRE(!r3.cm_free);
  CHECK(!is_projective_module(*r3.witness));
  CHECK(gp_test(*r3.witness, pr.ctx, opts()) == GpVerdict::GP);

  auto a2 = build_from_quiver(fixtures::a2_quiver(), FieldSpec::prime(2));
  GorensteinContext ctx2 = gorenstein_context(a2, opts());
  CmFreeResult r2 = cm_free_scan(a2, ctx2, 4, opts());
  CHECK(r2.cm_free);

  Presentation pt;
  pt.quiver.vertex_count = 1;
  auto k = build_from_quiver(pt, FieldSpec::prime(3));
  GorensteinContext ctxk = gorenstein_context(k, opts());
  CHECK(cm_free_scan(k, ctxk, 3, opts()).cm_free);
}

TEST_CASE("Gmon membership over the paper tensor ring") {
  PaperRing pr;
  // (S2, 0): u is the zero map out of the zero module, cokernel S2 is GP
  RepPair s2 = make_rep_pair(pr.t, pr.left.simples[1], Matrix(F2, 1, 0));
  CHECK(gmon_test(pr.t, s2, pr.ctx, opts()).verdict == GmonVerdict::InGmon);

  // (S3, 0): u = 0 out of a 2-dimensional space is not injective
  RepPair s3 = make_rep_pair(pr.t, pr.left.simples[2], Matrix(F2, 1, 2));
  CHECK(gmon_test(pr.t, s3, pr.ctx, opts()).verdict == GmonVerdict::NotInGmon);

  // induced projectives always land in Gmon
  for (const Module& p : pr.left.projectives) {
    Induced ip = induce(pr.t, p);
    CHECK(gmon_test(pr.t, ip.rep, pr.ctx, opts()).verdict == GmonVerdict::InGmon);
  }
}

TEST_CASE("M-flatness") {
  PaperRing pr;
  // for the paper bimodule every module is M-flat (M is right-projective)
  for (const Module& x : pr.left.simples)
    CHECK(m_flat_test(*pr.t.tower(), x, opts()).verdict == MFlatResult::V::MFlat);
  CHECK(m_flat_test(*pr.t.tower(), pr.left.projectives[0], opts()).verdict ==
        MFlatResult::V::MFlat);

  // k over k[x]/(x^2) with M = k as a bimodule is not M-flat
  auto kx = build_from_quiver(fixtures::loop_x2(), QQ);
  std::vector<Matrix> act{Matrix::identity(QQ, 1), Matrix(QQ, 1, 1)};
  Bimodule mk = Bimodule::make(kx, kx, act, act);
  TensorTower tk(mk, 6);
  // M^(x)i never vanishes here, so use the non-nilpotent guard
  CHECK_THROWS_WITH_AS((void)m_flat_test(tk, simples_and_projectives(kx).simples[0], opts()),
                       doctest::Contains("NotNilpotent"), Error);
}

TEST_CASE("perfectness") {
  PaperRing pr;
  PerfectReport rep = perfect_test(*pr.t.tower(), opts());
  CHECK(rep.pd_left == HomDimVerdict::finite(0));
  CHECK(rep.pd_right == HomDimVerdict::finite(0));
  CHECK(rep.condition_p == PerfectReport::P::Pass);
  CHECK(rep.symmetric_agrees);
  CHECK(rep.perfect == PerfectReport::V::Yes);

  // the zero bimodule is perfect
  TensorTower zt(zero_bimodule(pr.a), 4);
  CHECK(perfect_test(zt, opts()).perfect == PerfectReport::V::Yes);

  // k over k[x]/(x^2): infinite pd on both sides, hence not perfect.
  // That bimodule is not nilpotent, so build the analogous failure over the
  // self-injective three-cycle: M' = S1 (x)_k S3^op has pd infinite
  Module s1 = pr.left.simples[0];
  Module s3r = pr.right.simples[2];
  Bimodule mbad = outer_tensor(s1, s3r);
  TensorTower tbad(mbad, 8);
  REQUIRE(tbad.nilpotency().has_value());
  PerfectReport bad = perfect_test(tbad, opts());
  CHECK(bad.pd_left.is_infinite_certified());
  CHECK(bad.perfect == PerfectReport::V::No);
}

TEST_CASE("admissibility report") {
  PaperRing pr;
  std::vector<Module> lf = pr.left.simples;
  std::vector<Module> rf = pr.right.simples;
  AdmissibleReport rep = admissible_report(pr.t, lf, rf, opts());
  CHECK(rep.left_ok);
  CHECK(rep.right_ok);
  CHECK(rep.via_perfect);
  CHECK(rep.failures.empty());

  // the zero bimodule is vacuously admissible
  TensorRing t0 = TensorRing::build(pr.a, zero_bimodule(pr.a), 4);
  AdmissibleReport rep0 = admissible_report(t0, lf, rf, opts());
  CHECK(rep0.left_ok);
  CHECK(rep0.right_ok);
}

TEST_CASE("Frobenius embeddings") {
  PaperRing pr;
  // (S2, 0) embeds into Ind(P1) (P1 has socle S2)
  RepPair s2 = make_rep_pair(pr.t, pr.left.simples[1], Matrix(F2, 1, 0));
  FrobeniusEmbedding fe = frobenius_embedding(pr.t, s2, pr.ctx, opts());
  CHECK(is_isomorphic(fe.ind_p.summand_tower[0].module, pr.left.projectives[0], 8, 5).yes());
  CHECK(gmon_test(pr.t, fe.cokernel, pr.ctx, opts()).verdict == GmonVerdict::InGmon);

  // induced representations embed with split cokernel
  Induced iq = induce(pr.t, pr.left.simples[0]);
  FrobeniusEmbedding fq = frobenius_embedding(pr.t, iq.rep, pr.ctx, opts());
  CHECK(kernel_basis(fq.embedding).cols() == 0);

  // the zero representation embeds into Ind(0)
  RepPair z = make_rep_pair(pr.t, Module::zero(pr.a, Side::Left), Matrix(F2, 0, 0));
  FrobeniusEmbedding fz = frobenius_embedding(pr.t, z, pr.ctx, opts());
  CHECK(fz.ind_p.t_module.dim == 0);

  // a non-Gmon representation is rejected
  RepPair s3 = make_rep_pair(pr.t, pr.left.simples[2], Matrix(F2, 1, 2));
  CHECK_THROWS_WITH_AS((void)frobenius_embedding(pr.t, s3, pr.ctx, opts()),
                       doctest::Contains("NotInGmon"), Error);
}

TEST_CASE("module enumeration over F_2") {
  auto a = build_from_quiver(fixtures::three_cycle(), F2);
  EnumerationOptions eo;
  eo.dim_cap = 2;
  std::vector<Module> mods = enumerate_modules(a, Side::Left, eo);
  // classes of dim <= 2: 0, S1, S2, S3, P1, P2, P3, and the six direct sums
  // of two distinct simples plus the three S_i^2: 7 + 6 + 3 = wait:
  // multisets of {S1,S2,S3} of size 2: 6; plus P1,P2,P3; plus simples; plus 0
  CHECK(mods.size() == 1 + 3 + 6 + 3);
  // cap 0: only the zero module
  EnumerationOptions z;
  z.dim_cap = 0;
  CHECK(enumerate_modules(a, Side::Left, z).size() == 1);

  // enumeration over Q is refused
  auto aq = build_from_quiver(fixtures::three_cycle(), QQ);
  CHECK_THROWS_WITH_AS((void)enumerate_modules(aq, Side::Left, eo),
                       doctest::Contains("FieldUnsupported"), Error);
}

TEST_CASE("T-module enumeration finds the simples at cap 1") {
  PaperRing pr;
  EnumerationOptions eo;
  eo.dim_cap = 1;
  std::vector<Module> mods = enumerate_t_modules(pr.t, eo);
  // dim <= 1: zero plus the three simples of T (every grade-1 element acts 0)
  CHECK(mods.size() == 4);
}
