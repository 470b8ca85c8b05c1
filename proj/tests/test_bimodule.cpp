#include <doctest.h>

#include "fixtures.hpp"
#include "tenring/bimodule.hpp"

using namespace tenring;

namespace {
const FieldSpec QQ = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

struct PaperData {
  AlgebraPtr a = build_from_quiver(fixtures::three_cycle(), F2);
  SimplesProjectives left = simples_and_projectives(a);
  SimplesProjectives right = simples_and_projectives(a, Side::Right);
  // M = Lambda e1 (x)_k e3 Lambda
  Bimodule m = outer_tensor(left.projectives[0], right.projectives[2]);
};
}  // namespace

TEST_CASE("outer tensor products") {
  PaperData pd;
  CHECK(pd.m.dim == 4);
  pd.m.validate();
  CHECK(pd.m.as_left_module().dim == 4);

  // k (x)_k k over the one-point algebra is the regular bimodule
  Presentation pt;
  pt.quiver.vertex_count = 1;
  auto k = build_from_quiver(pt, QQ);
  Bimodule kk = outer_tensor(regular_module(k, Side::Left), regular_module(k, Side::Right));
  CHECK(kk.dim == 1);
  CHECK(kk.left_action[0].is_identity());

  Bimodule z = outer_tensor(Module::zero(pd.a, Side::Left), pd.right.projectives[0]);
  CHECK(z.dim == 0);
}

TEST_CASE("tensor over R: unit constraint and vanishing") {
  PaperData pd;
  Bimodule reg = regular_bimodule(pd.a);
  for (const Module& x : {pd.left.simples[0], pd.left.projectives[1]}) {
    TensoredModule t = tensor_over_R(reg, x);
    CHECK(t.module.dim == x.dim);
    CHECK(is_isomorphic(t.module, x, 8, 5).yes());
  }

  // e3 Lambda (x)_Lambda S3 is one-dimensional (= e3 * S3)
  CHECK(tensor_dim(pd.right.projectives[2], pd.left.simples[2]) == 1);

  // M (x) S2 = 0 because e3 * S2 = 0
  CHECK(tensor_over_R(pd.m, pd.left.simples[1]).module.dim == 0);
  // M (x) S3 = Lambda e1 (x) (e3 S3), dimension 2
  CHECK(tensor_over_R(pd.m, pd.left.simples[2]).module.dim == 2);
}

TEST_CASE("tensor powers and nilpotency") {
  PaperData pd;
  TensorTower tower(pd.m, 16);
  CHECK(tower.power(0).dim == 6);
  CHECK(tower.power(1).dim == 4);
  REQUIRE(tower.nilpotency().has_value());
  CHECK(*tower.nilpotency() == 1);  // M (x)_R M = 0: no surviving path 1 -> 3

  TensorTower zero(zero_bimodule(pd.a), 16);
  CHECK(zero.nilpotency() == 0);

  // all powers of the regular bimodule are R itself: never nilpotent
  TensorTower reg(regular_bimodule(pd.a), 4);
  CHECK(!reg.nilpotency().has_value());
  CHECK(reg.power(4).dim == 6);
  CHECK(nilpotency_index(reg).cap == 4);
}

TEST_CASE("bimodule direct sums") {
  PaperData pd;
  Bimodule two = bimodule_direct_sum({pd.m, pd.m}, pd.a, pd.a);
  CHECK(two.dim == 8);
  two.validate();
  Bimodule none = bimodule_direct_sum({}, pd.a, pd.a);
  CHECK(none.dim == 0);
}

TEST_CASE("the multiplication maps compose tensors associatively") {
  // over k[x]/(x^2) take M = the radical as a bimodule: M^(x)i stays 1-dim
  auto kx = build_from_quiver(fixtures::loop_x2(), QQ);
  // x*k[x] as a sub-bimodule: actions of {e, x} on span{x}: e acts 1, x acts 0
  std::vector<Matrix> act{Matrix::identity(QQ, 1), Matrix(QQ, 1, 1)};
  Bimodule m = Bimodule::make(kx, kx, act, act);
  TensorTower tower(m, 8);
  // x (x) x never vanishes: M^(x)i has dimension 1 for every i
  CHECK(!tower.nilpotency().has_value());
  for (std::size_t i = 1; i <= 8; ++i) CHECK(tower.power(i).dim == 1);
  // mu(i, j) composes to a nonzero map
  CHECK(!tower.mu(2, 3).is_zero());
  CHECK(tower.mu(2, 3).rows() == 1);
  CHECK(tower.mu(2, 3).cols() == 1);
}
