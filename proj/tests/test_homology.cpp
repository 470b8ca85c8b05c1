#include <doctest.h>

#include "fixtures.hpp"
#include "tenring/homology.hpp"

using namespace tenring;

namespace {
const FieldSpec QQ = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
}  // namespace

TEST_CASE("resolutions over the three-cycle are periodic with period 3") {
  auto a = build_from_quiver(fixtures::three_cycle(), F2);
  auto sp = simples_and_projectives(a);
  ResolutionSegment res = projective_resolution(sp.simples[0], 4);
  REQUIRE(res.modules.size() == 5);
  // P-terms P1, P2, P3, P1, P2: identify by which idempotent acts nonzero
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(res.modules[i].dim == 2);
    CHECK(is_isomorphic(res.modules[i], sp.projectives[i % 3], 8, 10 + i).yes());
  }
}

TEST_CASE("resolution of a projective stops at length 0") {
  auto a = build_from_quiver(fixtures::a2_quiver(), QQ);
  auto sp = simples_and_projectives(a);
  ResolutionSegment res = projective_resolution(sp.projectives[0], 2);
  CHECK(res.modules[0].dim == 2);
  CHECK(res.modules[1].dim == 0);
  CHECK(res.modules[2].dim == 0);

  // 0 -> P2 -> P1 -> S1 -> 0 over the A2 quiver
  ResolutionSegment r1 = projective_resolution(sp.simples[0], 2);
  CHECK(r1.modules[0].dim == 2);
  CHECK(is_isomorphic(r1.modules[1], sp.projectives[1], 8, 3).yes());
  CHECK(r1.modules[2].dim == 0);
}

TEST_CASE("pd verdicts") {
  HomologyOptions opt;
  opt.seed = 41;

  auto a2 = build_from_quiver(fixtures::a2_quiver(), QQ);
  auto sp2 = simples_and_projectives(a2);
  CHECK(pd_verdict(sp2.simples[0], opt) == HomDimVerdict::finite(1));
  CHECK(pd_verdict(sp2.projectives[0], opt) == HomDimVerdict::finite(0));

  auto kx = build_from_quiver(fixtures::loop_x2(), QQ);
  auto spk = simples_and_projectives(kx);
  HomDimVerdict v = pd_verdict(spk.simples[0], opt);
  CHECK(v.kind == HomDimVerdict::Kind::InfinitePeriodic);
  CHECK(v.period == 1);

  auto a3 = build_from_quiver(fixtures::three_cycle(), F2);
  auto sp3 = simples_and_projectives(a3);
  HomDimVerdict v3 = pd_verdict(sp3.simples[0], opt);
  CHECK(v3.kind == HomDimVerdict::Kind::InfinitePeriodic);
  CHECK(v3.period == 3);

  // the zero module is projective
  CHECK(pd_verdict(Module::zero(a2, Side::Left), opt) == HomDimVerdict::finite(0));
}

TEST_CASE("Ext dimensions") {
  auto a = build_from_quiver(fixtures::three_cycle(), F2);
  auto sp = simples_and_projectives(a);
  // one arrow 1 -> 2 on a radical-square-zero algebra
  CHECK(ext_dim(sp.simples[0], sp.simples[1], 1) == 1);
  CHECK(ext_dim(sp.simples[0], sp.simples[2], 1) == 0);

  Module reg = regular_module(a, Side::Left);
  for (std::size_t i = 1; i <= 3; ++i) CHECK(ext_dim(sp.projectives[1], reg, i) == 0);

  // Ext^0 = Hom
  CHECK(ext_dim(sp.simples[0], sp.simples[0], 0) == hom_dim(sp.simples[0], sp.simples[0]));
  CHECK(ext_dim(sp.projectives[0], sp.simples[0], 0) == 1);
}

TEST_CASE("Tor dimensions over k[x]/(x^2)") {
  auto kx = build_from_quiver(fixtures::loop_x2(), QQ);
  Module k_left = simples_and_projectives(kx).simples[0];
  Module k_right = simples_and_projectives(kx, Side::Right).simples[0];
  CHECK(tor_dim(k_right, k_left, 1) == 1);
  CHECK(tor_dim(k_right, k_left, 2) == 1);
  CHECK(tor_dim_alt(k_right, k_left, 1) == 1);

  Module reg_r = regular_module(kx, Side::Right);
  CHECK(tor_dim(reg_r, k_left, 1) == 0);
  CHECK(tor_dim(reg_r, k_left, 2) == 0);

  // Tor_0 is the tensor product
  CHECK(tor_dim(k_right, k_left, 0) == tensor_dim(k_right, k_left));
  CHECK(tensor_dim(reg_r, k_left) == 1);
}

TEST_CASE("Tor balance and Ext duality on random samples") {
  auto a = build_from_quiver(fixtures::three_cycle(), F2);
  SeededRng rng(77);
  for (int t = 0; t < 5; ++t) {
    Module x = random_module(a, Side::Left, rng);
    Module y = random_module(a, Side::Right, rng);
    for (std::size_t i = 0; i <= 2; ++i) {
      CHECK(tor_dim(y, x, i) == tor_dim_alt(y, x, i));
      CHECK(ext_dim(x, dual_D(y), i) == ext_dim(y, dual_D(x), i));
    }
  }
}

TEST_CASE("Euler form on the hereditary A2 quiver") {
  auto a2 = build_from_quiver(fixtures::a2_quiver(), QQ);
  auto sp = simples_and_projectives(a2);
  // dimension vector of a module: multiplicity of e_i acting as rank
  auto dimvec = [&](const Module& m) {
    std::vector<std::size_t> d;
    for (const Matrix& e : {m.action_of(a2->idempotents()[0]),
                            m.action_of(a2->idempotents()[1])})
      d.push_back(rank_of(e));
    return d;
  };
  // <dX, dY> = sum d_i(X) d_i(Y) - d_1(X) d_2(Y) for the single arrow 1 -> 2
  SeededRng rng(313);
  std::vector<Module> samples{sp.simples[0], sp.simples[1], sp.projectives[0]};
  for (int t = 0; t < 4; ++t) samples.push_back(random_module(a2, Side::Left, rng));
  for (const Module& x : samples)
    for (const Module& y : samples) {
      auto dx = dimvec(x), dy = dimvec(y);
      long euler = static_cast<long>(dx[0] * dy[0] + dx[1] * dy[1]) -
                   static_cast<long>(dx[0] * dy[1]);
      long homext = static_cast<long>(hom_dim(x, y)) - static_cast<long>(ext_dim(x, y, 1));
      CHECK(euler == homext);
    }
}
