#include "tenring/linalg.hpp"

#include "tenring/kernels.hpp"

namespace tenring {

using kernels::FpOps;
using kernels::QOps;

RrefResult rref_rank(const Matrix& m) {
  RrefResult res;
  res.rref = m;
  if (m.size() == 0) {
    // no entries to eliminate; rank 0
    return res;
  }
  kernels::RrefOut out;
  if (m.is_fp()) {
    FpOps F{m.field().p};
    out = kernels::par::rref_in_place(F, res.rref.fp_data(), m.rows(), m.cols());
  } else {
    QOps F;
    out = kernels::par::rref_in_place(F, res.rref.q_data(), m.rows(), m.cols());
  }
  res.rank = out.rank;
  res.pivot_cols = std::move(out.pivot_cols);
  return res;
}

std::size_t rank_of(const Matrix& m) { return rref_rank(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  RrefResult r = rref_rank(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix k(m.field(), m.cols(), free_cols.size());
  Matrix neg = -r.rref;
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    std::size_t f = free_cols[t];
    k.set(f, t, 1);
    for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
      k.copy_entry(r.pivot_cols[pr], t, neg, pr, f);
  }
  return k;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), Errc::DimensionMismatch, "solve: row counts differ");
  require_same_field(a.field(), b.field());
  Matrix aug = hstack(a, b);
  RrefResult r = rref_rank(aug);
  for (std::size_t c : r.pivot_cols)
    if (c >= a.cols()) return std::nullopt;
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr) {
    std::size_t pc = r.pivot_cols[pr];
    for (std::size_t j = 0; j < b.cols(); ++j) x.copy_entry(pc, j, r.rref, pr, a.cols() + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  require(a.rows() == a.cols(), Errc::DimensionMismatch, "inverse of non-square matrix");
  // solve(a, I) is inconsistent exactly when a is singular
  return solve(a, Matrix::identity(a.field(), a.rows()));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  if (out.size() == 0) return out;
  if (a.is_fp()) {
    FpOps F{a.field().p};
    kernels::par::kron(F, a.fp_data().data(), a.rows(), a.cols(), b.fp_data().data(), b.rows(),
                       b.cols(), out.fp_data().data());
  } else {
    QOps F;
    kernels::par::kron(F, a.q_data().data(), a.rows(), a.cols(), b.q_data().data(), b.rows(),
                       b.cols(), out.q_data().data());
  }
  return out;
}

std::size_t homology_dim(const Matrix& d_in, const Matrix& d_out) {
  require(d_out.cols() == d_in.rows(), Errc::DimensionMismatch,
          "homology_dim: middle dimensions differ");
  if (!(d_out * d_in).is_zero()) fail(Errc::NotAComplex, "d_out * d_in != 0");
  std::size_t ker = d_out.cols() - rank_of(d_out);
  std::size_t im = rank_of(d_in);
  require(ker >= im, Errc::Internal, "homology_dim: negative dimension");
  return ker - im;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  require(a.rows() == b.rows(), Errc::DimensionMismatch, "hstack");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.copy_entry(i, j, a, i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out.copy_entry(i, a.cols() + j, b, i, j);
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  require(a.cols() == b.cols(), Errc::DimensionMismatch, "vstack");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.copy_entry(i, j, a, i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.copy_entry(a.rows() + i, j, b, i, j);
  return out;
}

Matrix hstack(const std::vector<Matrix>& parts, FieldSpec f, std::size_t rows) {
  std::size_t cols = 0;
  for (const Matrix& p : parts) {
    require(p.rows() == rows, Errc::DimensionMismatch, "hstack list");
    cols += p.cols();
  }
  Matrix out(f, rows, cols);
  std::size_t off = 0;
  for (const Matrix& p : parts) {
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < p.cols(); ++j) out.copy_entry(i, off + j, p, i, j);
    off += p.cols();
  }
  return out;
}

Matrix vstack(const std::vector<Matrix>& parts, FieldSpec f, std::size_t cols) {
  std::size_t rows = 0;
  for (const Matrix& p : parts) {
    require(p.cols() == cols, Errc::DimensionMismatch, "vstack list");
    rows += p.rows();
  }
  Matrix out(f, rows, cols);
  std::size_t off = 0;
  for (const Matrix& p : parts) {
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < p.cols(); ++j) out.copy_entry(off + i, j, p, i, j);
    off += p.rows();
  }
  return out;
}

Matrix select_columns(const Matrix& m, const std::vector<std::size_t>& idx) {
  Matrix out(m.field(), m.rows(), idx.size());
  for (std::size_t t = 0; t < idx.size(); ++t)
    for (std::size_t i = 0; i < m.rows(); ++i) out.copy_entry(i, t, m, i, idx[t]);
  return out;
}

Matrix select_rows(const Matrix& m, const std::vector<std::size_t>& idx) {
  Matrix out(m.field(), idx.size(), m.cols());
  for (std::size_t t = 0; t < idx.size(); ++t)
    for (std::size_t j = 0; j < m.cols(); ++j) out.copy_entry(t, j, m, idx[t], j);
  return out;
}

Matrix submatrix(const Matrix& m, std::size_t r0, std::size_t c0, std::size_t rows,
                 std::size_t cols) {
  require(r0 + rows <= m.rows() && c0 + cols <= m.cols(), Errc::DimensionMismatch,
          "submatrix out of range");
  Matrix out(m.field(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.copy_entry(i, j, m, r0 + i, c0 + j);
  return out;
}

ColumnSpace column_space(const Matrix& m) {
  RrefResult r = rref_rank(m);
  return ColumnSpace{r.pivot_cols, select_columns(m, r.pivot_cols)};
}

QuotientSpace quotient_by_columns(const Matrix& u, std::size_t ambient_dim) {
  require(u.cols() == 0 || u.rows() == ambient_dim, Errc::DimensionMismatch,
          "quotient_by_columns: ambient dimension");
  Matrix ut = u.cols() == 0 ? Matrix(u.field(), 0, ambient_dim) : u.transpose();
  RrefResult r = rref_rank(ut);
  std::vector<bool> is_pivot(ambient_dim, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < ambient_dim; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  QuotientSpace q{Matrix(u.field(), free_cols.size(), ambient_dim),
                  Matrix(u.field(), ambient_dim, free_cols.size())};
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    q.proj.set(t, free_cols[t], 1);
    q.section.set(free_cols[t], t, 1);
  }
  // pivot coordinates reduce to minus the free part of the matching rref row
  Matrix neg = -r.rref;
  for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr) {
    std::size_t pc = r.pivot_cols[pr];
    for (std::size_t t = 0; t < free_cols.size(); ++t)
      q.proj.copy_entry(t, pc, neg, pr, free_cols[t]);
  }
  return q;
}

Matrix random_matrix(FieldSpec f, std::size_t rows, std::size_t cols, SeededRng& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (f.is_prime())
        m.set(i, j, static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(f.p))));
      else
        m.set(i, j, rng.range(-4, 4));
    }
  return m;
}

bool columns_contained_in(const Matrix& sub, const Matrix& space) {
  if (sub.cols() == 0) return true;
  return rank_of(hstack(space, sub)) == rank_of(space);
}

}  // namespace tenring
