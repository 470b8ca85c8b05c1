#ifndef TENRING_LINALG_HPP
#define TENRING_LINALG_HPP

#include <optional>
#include <vector>

#include "tenring/matrix.hpp"
#include "tenring/rng.hpp"

namespace tenring {

struct RrefResult {
  Matrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

RrefResult rref_rank(const Matrix& m);
std::size_t rank_of(const Matrix& m);

// columns span the null space; column count = cols - rank
Matrix kernel_basis(const Matrix& m);

// any x with a*x = b, or nullopt when the system is inconsistent
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& a);

Matrix kron(const Matrix& a, const Matrix& b);

// dim ker(d_out) - rank(d_in) for a two-step complex; throws NotAComplex
// unless d_out * d_in = 0
std::size_t homology_dim(const Matrix& d_in, const Matrix& d_out);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& parts, FieldSpec f, std::size_t rows);
Matrix vstack(const std::vector<Matrix>& parts, FieldSpec f, std::size_t cols);
Matrix select_columns(const Matrix& m, const std::vector<std::size_t>& idx);
Matrix select_rows(const Matrix& m, const std::vector<std::size_t>& idx);
Matrix submatrix(const Matrix& m, std::size_t r0, std::size_t c0, std::size_t rows,
                 std::size_t cols);

// indices of a column subset of m forming a basis of its column space,
// together with those columns
struct ColumnSpace {
  std::vector<std::size_t> pivots;
  Matrix basis;  // m restricted to pivot columns
};
ColumnSpace column_space(const Matrix& m);

// canonical complement coordinates for k^n / span(columns of u):
// proj * section = I, proj * u = 0, dim = n - rank(u)
struct QuotientSpace {
  Matrix proj;     // dim x n
  Matrix section;  // n x dim
};
QuotientSpace quotient_by_columns(const Matrix& u, std::size_t ambient_dim);

// entries uniform in F_p, or small integers (numerators in [-4,4]) over Q
Matrix random_matrix(FieldSpec f, std::size_t rows, std::size_t cols, SeededRng& rng);

// true iff the columns of sub lie in the column span of space
bool columns_contained_in(const Matrix& sub, const Matrix& space);

}  // namespace tenring

#endif
