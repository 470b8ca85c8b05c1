#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"

using namespace tenring;

namespace {
const FieldSpec QQ = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
}  // namespace

TEST_CASE("three-cycle algebra has the expected basis") {
  auto a = build_from_quiver(fixtures::three_cycle(), F2);
  CHECK(a->dim() == 6);
  std::vector<std::string> want{"e1", "e2", "e3", "a1", "a2", "a3"};
  CHECK(a->basis_labels() == want);
  CHECK(a->radical().cols() == 3);
  CHECK(a->idempotents().size() == 3);

  // relations kill the length-2 paths: a2 * a1 = 0 ("traverse a1 then a2")
  std::size_t ia1 = 3, ia2 = 4;
  CHECK(a->multiply(Matrix::basis_column(F2, 6, ia2), Matrix::basis_column(F2, 6, ia1))
            .is_zero());
  // e2 * a1 = a1 (a1 ends at vertex 2)
  CHECK(a->multiply(a->idempotents()[1], Matrix::basis_column(F2, 6, ia1)) ==
        Matrix::basis_column(F2, 6, ia1));
  // a1 * e1 = a1 (a1 starts at vertex 1)
  CHECK(a->multiply(Matrix::basis_column(F2, 6, ia1), a->idempotents()[0]) ==
        Matrix::basis_column(F2, 6, ia1));
}

TEST_CASE("loop modulo x^2 and the A2 path algebra") {
  auto kx = build_from_quiver(fixtures::loop_x2(), QQ);
  CHECK(kx->dim() == 2);
  CHECK(kx->radical().cols() == 1);

  auto a2 = build_from_quiver(fixtures::a2_quiver(), QQ);
  CHECK(a2->dim() == 3);
  std::vector<std::string> want{"e1", "e2", "a"};
  CHECK(a2->basis_labels() == want);
}

TEST_CASE("relation-free cycles are rejected as infinite-dimensional") {
  Presentation p;
  p.quiver.vertex_count = 1;
  p.quiver.arrows = {{"x", 0, 0}};
  CHECK_THROWS_WITH_AS((void)build_from_quiver(p, QQ), doctest::Contains("InfiniteDimensional"),
                       Error);

  // the unbounded 3-cycle path algebra
  Presentation c = fixtures::three_cycle();
  c.relations.clear();
  CHECK_THROWS_AS((void)build_from_quiver(c, QQ), Error);

  // dropping one relation still leaves a finite algebra: only one composable
  // length-2 window survives
  Presentation d = fixtures::three_cycle();
  d.relations.pop_back();
  CHECK(build_from_quiver(d, QQ)->dim() == 7);
}

TEST_CASE("malformed relations") {
  Presentation p = fixtures::a2_quiver();
  p.relations = {{0}};  // length 1
  CHECK_THROWS_WITH_AS((void)build_from_quiver(p, QQ), doctest::Contains("MalformedRelation"),
                       Error);
  Presentation q = fixtures::a2_quiver();
  q.relations = {{0, 0}};  // a then a is not composable (1->2, 1->2)
  CHECK_THROWS_AS((void)build_from_quiver(q, QQ), Error);
}

TEST_CASE("raw structure constants: k x k and validation failures") {
  // diagonal multiplication on basis {u, v}
  FieldSpec f = QQ;
  Matrix lu(f, 2, 2), lv(f, 2, 2);
  lu.set(0, 0, 1);
  lv.set(1, 1, 1);
  Matrix unit(f, 2, 1);
  unit.set(0, 0, 1);
  unit.set(1, 0, 1);
  Matrix e1(f, 2, 1), e2(f, 2, 1);
  e1.set(0, 0, 1);
  e2.set(1, 0, 1);
  auto a = build_from_structure_constants(f, {"u", "v"}, {lu, lv}, unit, {e1, e2},
                                          std::nullopt);
  CHECK(a->dim() == 2);
  CHECK(a->radical().cols() == 0);

  // over F_p the radical must be supplied
  Matrix lu2(F2, 2, 2), lv2(F2, 2, 2);
  lu2.set(0, 0, 1);
  lv2.set(1, 1, 1);
  Matrix unit2(F2, 2, 1);
  unit2.set(0, 0, 1);
  unit2.set(1, 0, 1);
  Matrix e12(F2, 2, 1), e22(F2, 2, 1);
  e12.set(0, 0, 1);
  e22.set(1, 0, 1);
  CHECK_THROWS_WITH_AS((void)build_from_structure_constants(F2, {"u", "v"}, {lu2, lv2}, unit2,
                                                            {e12, e22}, std::nullopt),
                       doctest::Contains("RadicalRequired"), Error);
  auto afp = build_from_structure_constants(F2, {"u", "v"}, {lu2, lv2}, unit2, {e12, e22},
                                            Matrix(F2, 2, 0));
  CHECK(afp->radical().cols() == 0);
}

TEST_CASE("a table with x*(x*x) != (x*x)*x is rejected") {
  // basis {e, x, y}; e is the unit, x*x = y, x*y = e, y*x = 0, y*y = 0:
  // then x*(x*x) = e but (x*x)*x = 0
  FieldSpec f = QQ;
  Matrix le = Matrix::identity(f, 3);
  Matrix lx(f, 3, 3), ly(f, 3, 3);
  lx.set(1, 0, 1);  // x*e = x
  lx.set(2, 1, 1);  // x*x = y
  lx.set(0, 2, 1);  // x*y = e
  ly.set(2, 0, 1);  // y*e = y
  Matrix unit = Matrix::basis_column(f, 3, 0);
  CHECK_THROWS_WITH_AS((void)build_from_structure_constants(f, {"e", "x", "y"}, {le, lx, ly},
                                                            unit, {unit}, std::nullopt),
                       doctest::Contains("NotAssociative"), Error);
}

TEST_CASE("upper triangular 2x2 over Q via raw tables has radical dim 1") {
  // basis {E11, E22, E12}; E12 * E22 = E12, E11 * E12 = E12
  FieldSpec f = QQ;
  std::vector<Matrix> l(3, Matrix(f, 3, 3));
  // L[E11]: E11*E11 = E11, E11*E12 = E12
  l[0].set(0, 0, 1);
  l[0].set(2, 2, 1);
  // L[E22]: E22*E22 = E22
  l[1].set(1, 1, 1);
  // L[E12]: E12*E22 = E12
  l[2].set(2, 1, 1);
  Matrix unit(f, 3, 1);
  unit.set(0, 0, 1);
  unit.set(1, 0, 1);
  Matrix e1 = Matrix::basis_column(f, 3, 0), e2 = Matrix::basis_column(f, 3, 1);
  auto a = build_from_structure_constants(f, {"E11", "E22", "E12"}, l, unit, {e1, e2},
                                          std::nullopt);
  // trace-form kernel oracle: the strictly upper triangular part
  CHECK(a->radical().cols() == 1);
  CHECK(!a->radical().entry_is_zero(2, 0));
}

TEST_CASE("opposite is an involution and preserves path counts") {
  auto a = build_from_quiver(fixtures::three_cycle(), F2);
  auto op = a->opposite();
  CHECK(op->dim() == 6);
  CHECK(op->opposite().get() == a.get());
  // double transpose of tables is the identity
  auto opop = make_opposite(*make_opposite(*a));
  for (std::size_t i = 0; i < 6; ++i) CHECK(opop->left_mult()[i] == a->left_mult()[i]);
  // arrows reversed: in the opposite, a1 runs 2 -> 1
  const auto& pres = op->origin().presentation;
  REQUIRE(pres.has_value());
  CHECK(pres->quiver.arrows[0].source == 1);
  CHECK(pres->quiver.arrows[0].target == 0);

  // a commutative algebra equals its opposite on tables
  auto kx = build_from_quiver(fixtures::loop_x2(), QQ);
  auto kxop = kx->opposite();
  for (std::size_t i = 0; i < kx->dim(); ++i)
    CHECK(kxop->left_mult()[i] == kx->left_mult()[i]);
}

TEST_CASE("radical is nilpotent and spans a two-sided ideal") {
  for (auto pres : {fixtures::three_cycle(), fixtures::loop_x2(), fixtures::a2_quiver()}) {
    auto a = build_from_quiver(pres, F2);
    const Matrix& j = a->radical();
    // J^m = 0 for some m <= dim: multiply out
    Matrix power = j;
    std::size_t m = 1;
    while (power.cols() > 0 && m <= a->dim()) {
      std::vector<Matrix> prods;
      for (std::size_t c = 0; c < j.cols(); ++c)
        prods.push_back(a->left_mult_of(select_columns(j, {c})) * power);
      power = column_space(hstack(prods, F2, a->dim())).basis;
      ++m;
    }
    CHECK(power.cols() == 0);
  }
}

TEST_CASE("supplied radical must be correct") {
  // k x k has zero radical; claiming a nonzero one must fail
  FieldSpec f = QQ;
  Matrix lu(f, 2, 2), lv(f, 2, 2);
  lu.set(0, 0, 1);
  lv.set(1, 1, 1);
  Matrix unit(f, 2, 1);
  unit.set(0, 0, 1);
  unit.set(1, 0, 1);
  Matrix e1(f, 2, 1), e2(f, 2, 1);
  e1.set(0, 0, 1);
  e2.set(1, 0, 1);
  Matrix bogus(f, 2, 1);
  bogus.set(0, 0, 1);
  CHECK_THROWS_WITH_AS((void)build_from_structure_constants(f, {"u", "v"}, {lu, lv}, unit,
                                                            {e1, e2}, bogus),
                       doctest::Contains("RadicalInvalid"), Error);
}
