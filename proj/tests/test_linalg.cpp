#include <doctest.h>

#include "tenring/kernels.hpp"
#include "tenring/linalg.hpp"

using namespace tenring;

namespace {

Matrix from_ints(FieldSpec f, std::size_t r, std::size_t c,
                 std::initializer_list<std::int64_t> vals) {
  Matrix m(f, r, c);
  std::size_t t = 0;
  for (std::int64_t v : vals) {
    m.set(t / c, t % c, v);
    ++t;
  }
  return m;
}

const FieldSpec QQ = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

}  // namespace

TEST_CASE("rref_rank on the spec examples") {
  // proportional rows
  Matrix a = from_ints(QQ, 2, 2, {1, 2, 2, 4});
  auto r = rref_rank(a);
  CHECK(r.rank == 1);
  CHECK(r.pivot_cols == std::vector<std::size_t>{0});

  // identity is its own rref
  Matrix id = Matrix::identity(QQ, 5);
  auto ri = rref_rank(id);
  CHECK(ri.rank == 5);
  CHECK(ri.rref == id);

  // over F_2
  Matrix b = from_ints(F2, 2, 2, {1, 1, 1, 1});
  CHECK(rref_rank(b).rank == 1);
}

TEST_CASE("rref is idempotent and rank equals transpose rank") {
  SeededRng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    FieldSpec f = trial % 2 ? QQ : FieldSpec::prime(5);
    std::size_t rows = 1 + rng.below(7), cols = 1 + rng.below(7);
    Matrix m = random_matrix(f, rows, cols, rng);
    auto r = rref_rank(m);
    auto rr = rref_rank(r.rref);
    CHECK(rr.rref == r.rref);
    CHECK(rr.rank == r.rank);
    CHECK(rank_of(m.transpose()) == r.rank);
  }
}

TEST_CASE("kernel_basis spans the null space") {
  Matrix a = from_ints(QQ, 1, 2, {1, 1});
  Matrix k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  CHECK((a * k).is_zero());
  // span{(1,-1)}: second coordinate is the negative of the first
  CHECK(k.q_at(0, 0) == -k.q_at(1, 0));
  CHECK(k.q_at(0, 0) != 0);

  Matrix z(QQ, 2, 3);
  CHECK(kernel_basis(z).cols() == 3);

  Matrix inv = from_ints(QQ, 2, 2, {1, 1, 0, 1});
  CHECK(kernel_basis(inv).cols() == 0);
}

TEST_CASE("rank-nullity on random matrices") {
  SeededRng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    FieldSpec f = trial % 2 ? QQ : F2;
    std::size_t rows = rng.below(6), cols = rng.below(6);
    Matrix m = random_matrix(f, rows, cols, rng);
    Matrix k = kernel_basis(m);
    CHECK(m.cols() == rank_of(m) + k.cols());
    CHECK((m * k).is_zero());
    CHECK(rank_of(k) == k.cols());
  }
}

TEST_CASE("solve") {
  Matrix id = Matrix::identity(QQ, 3);
  SeededRng rng(3);
  Matrix b = random_matrix(QQ, 3, 2, rng);
  auto x = solve(id, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  Matrix a = from_ints(QQ, 2, 1, {1, 1});
  Matrix bad = from_ints(QQ, 2, 1, {0, 1});
  CHECK(!solve(a, bad).has_value());

  Matrix two = from_ints(QQ, 1, 1, {2});
  Matrix one = from_ints(QQ, 1, 1, {1});
  auto half = solve(two, one);
  REQUIRE(half.has_value());
  CHECK(half->q_at(0, 0) == mpq_class(1, 2));

  Matrix wrong(QQ, 3, 1);
  CHECK_THROWS_AS((void)solve(a, wrong), Error);
}

TEST_CASE("solve finds some solution on random consistent systems") {
  SeededRng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    FieldSpec f = trial % 2 ? QQ : FieldSpec::prime(3);
    std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(5);
    Matrix a = random_matrix(f, rows, cols, rng);
    Matrix y = random_matrix(f, cols, 1, rng);
    Matrix b = a * y;
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a * *x == b);
  }
}

TEST_CASE("kron dimensions, identity blocks, covectors") {
  SeededRng rng(19);
  Matrix a = random_matrix(QQ, 2, 3, rng);
  Matrix b = random_matrix(QQ, 4, 5, rng);
  Matrix k = kron(a, b);
  CHECK(k.rows() == 8);
  CHECK(k.cols() == 15);

  // kron(I_n, a) is block diagonal with n copies of a
  Matrix i2 = Matrix::identity(QQ, 2);
  Matrix bd = kron(i2, a);
  CHECK(submatrix(bd, 0, 0, 2, 3) == a);
  CHECK(submatrix(bd, 2, 3, 2, 3) == a);
  CHECK(submatrix(bd, 0, 3, 2, 3).is_zero());

  Matrix e1t(QQ, 1, 3);
  e1t.set(0, 0, 1);
  Matrix ee = kron(e1t, e1t);
  CHECK(ee.rows() == 1);
  CHECK(ee.cols() == 9);
  for (std::size_t j = 0; j < 9; ++j) CHECK(ee.entry_is_zero(0, j) == (j != 0));
}

TEST_CASE("kron is multiplicative in products and ranks") {
  SeededRng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    FieldSpec f = trial % 2 ? QQ : F2;
    Matrix a = random_matrix(f, 2 + rng.below(2), 2 + rng.below(2), rng);
    Matrix c = random_matrix(f, a.cols(), 2, rng);
    Matrix b = random_matrix(f, 2 + rng.below(2), 2 + rng.below(2), rng);
    Matrix d = random_matrix(f, b.cols(), 2, rng);
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    CHECK(rank_of(kron(a, b)) == rank_of(a) * rank_of(b));
  }
}

TEST_CASE("homology_dim") {
  // zero differentials on a 2-dim space
  Matrix z(QQ, 2, 2);
  CHECK(homology_dim(Matrix(QQ, 2, 0), z) == 2);
  CHECK(homology_dim(z, z) == 2);

  // short exact pair: d_in injective with image = ker d_out
  Matrix d_in = from_ints(QQ, 2, 1, {1, 0});
  Matrix d_out = from_ints(QQ, 1, 2, {0, 1});
  CHECK(homology_dim(d_in, d_out) == 0);

  // multiplication by x on k[x]/(x^2): the periodic complex is exact here.
  // Hand rank count: ker = span{x} (dim 1), im = span{x} (rank 1) -> 0.
  Matrix mx = from_ints(QQ, 2, 2, {0, 0, 1, 0});
  CHECK((mx * mx).is_zero());
  CHECK(homology_dim(mx, mx) == 0);

  // not a complex
  Matrix id = Matrix::identity(QQ, 2);
  CHECK_THROWS_AS((void)homology_dim(id, id), Error);
}

TEST_CASE("quotient_by_columns gives a complement projection") {
  SeededRng rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    FieldSpec f = trial % 2 ? QQ : F2;
    std::size_t n = 1 + rng.below(6);
    Matrix u = random_matrix(f, n, rng.below(4), rng);
    auto q = quotient_by_columns(u, n);
    CHECK(q.proj.rows() == n - rank_of(u));
    CHECK((q.proj * u).is_zero());
    CHECK((q.proj * q.section).is_identity());
  }
}

TEST_CASE("serial kernels agree with the production kernels") {
  SeededRng rng(1234);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t n = 1 + rng.below(24), k = 1 + rng.below(24), m = 1 + rng.below(24);
    SUBCASE("") {}
    // F_p (including the packed F_2 path) and Q
    for (FieldSpec f : {FieldSpec::prime(2), FieldSpec::prime(32003), QQ}) {
      Matrix a = random_matrix(f, n, k, rng);
      Matrix b = random_matrix(f, k, m, rng);

      Matrix prod_par = a * b;
      Matrix prod_ser(f, n, m);
      if (f.is_prime()) {
        kernels::FpOps F{f.p};
        kernels::serial::matmul(F, a.fp_data().data(), n, k, b.fp_data().data(), m,
                                prod_ser.fp_data().data());
      } else {
        kernels::QOps F;
        kernels::serial::matmul(F, a.q_data().data(), n, k, b.q_data().data(), m,
                                prod_ser.q_data().data());
      }
      CHECK(prod_par == prod_ser);

      Matrix r_ser = a;
      kernels::RrefOut o_ser;
      if (f.is_prime()) {
        kernels::FpOps F{f.p};
        o_ser = kernels::serial::rref_in_place(F, r_ser.fp_data(), n, k);
      } else {
        kernels::QOps F;
        o_ser = kernels::serial::rref_in_place(F, r_ser.q_data(), n, k);
      }
      auto r_par = rref_rank(a);
      CHECK(r_par.rref == r_ser);
      CHECK(r_par.rank == o_ser.rank);
      CHECK(r_par.pivot_cols == o_ser.pivot_cols);
    }
  }
}
