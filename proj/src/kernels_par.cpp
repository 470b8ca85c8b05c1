// OpenMP production kernels. Work below the thresholds runs the serial loop
// bodies; above them the row (rref) and output-entry (matmul, kron) updates
// are parallel. Every parallel iteration writes a disjoint slot and reads
// shared state fixed before the region, so results are bitwise identical to
// the serial reference for any thread count.

#include <omp.h>

#include <cstring>

#include "tenring/kernels.hpp"

namespace tenring::kernels::par {

namespace {
constexpr std::size_t kParallelCells = 1u << 14;

// F_2 fast path: rows packed into 64-bit words, elimination by word XOR.
RrefOut rref_f2_packed(std::vector<std::int64_t>& a, std::size_t rows, std::size_t cols) {
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::uint64_t> w(rows * words, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (a[i * cols + j]) w[i * words + (j >> 6)] |= 1ULL << (j & 63);

  RrefOut out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    const std::size_t wc = c >> 6;
    const std::uint64_t bit = 1ULL << (c & 63);
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (w[i * words + wc] & bit) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t t = 0; t < words; ++t) std::swap(w[piv * words + t], w[r * words + t]);
    const std::uint64_t* prow = &w[r * words];
#pragma omp parallel for schedule(static) if (rows * words >= kParallelCells)
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      if (w[i * words + wc] & bit)
        for (std::size_t t = wc; t < words; ++t) w[i * words + t] ^= prow[t];
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      a[i * cols + j] = (w[i * words + (j >> 6)] >> (j & 63)) & 1;
  return out;
}
}  // namespace

template <class Ops>
void matmul(const Ops& F, const typename Ops::Elem* a, std::size_t n, std::size_t k,
            const typename Ops::Elem* b, std::size_t m, typename Ops::Elem* out) {
#pragma omp parallel for schedule(static) if (n * m * k >= kParallelCells)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      typename Ops::Elem acc = F.zero();
      for (std::size_t t = 0; t < k; ++t) acc = F.add(acc, F.mul(a[i * k + t], b[t * m + j]));
      out[i * m + j] = acc;
    }
}

template <class Ops>
RrefOut rref_in_place(const Ops& F, std::vector<typename Ops::Elem>& a, std::size_t rows,
                      std::size_t cols) {
  if constexpr (std::is_same_v<Ops, FpOps>) {
    if (F.p == 2) return rref_f2_packed(a, rows, cols);
  }
  RrefOut out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!F.is_zero(a[i * cols + c])) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    typename Ops::Elem s = F.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = F.mul(a[r * cols + j], s);
#pragma omp parallel for schedule(static) if (rows * (cols - c) >= kParallelCells)
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      typename Ops::Elem f = a[i * cols + c];
      if (F.is_zero(f)) continue;
      for (std::size_t j = c; j < cols; ++j)
        a[i * cols + j] = F.sub(a[i * cols + j], F.mul(f, a[r * cols + j]));
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

template <class Ops>
void kron(const Ops& F, const typename Ops::Elem* a, std::size_t ar, std::size_t ac,
          const typename Ops::Elem* b, std::size_t br, std::size_t bc,
          typename Ops::Elem* out) {
#pragma omp parallel for collapse(2) schedule(static) if (ar * ac * br * bc >= kParallelCells)
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t k = 0; k < br; ++k)
      for (std::size_t j = 0; j < ac; ++j)
        for (std::size_t l = 0; l < bc; ++l)
          out[(i * br + k) * (ac * bc) + (j * bc + l)] = F.mul(a[i * ac + j], b[k * bc + l]);
}

template void matmul<FpOps>(const FpOps&, const std::int64_t*, std::size_t, std::size_t,
                            const std::int64_t*, std::size_t, std::int64_t*);
template void matmul<QOps>(const QOps&, const mpq_class*, std::size_t, std::size_t,
                           const mpq_class*, std::size_t, mpq_class*);
template RrefOut rref_in_place<FpOps>(const FpOps&, std::vector<std::int64_t>&, std::size_t,
                                      std::size_t);
template RrefOut rref_in_place<QOps>(const QOps&, std::vector<mpq_class>&, std::size_t,
                                     std::size_t);
template void kron<FpOps>(const FpOps&, const std::int64_t*, std::size_t, std::size_t,
                          const std::int64_t*, std::size_t, std::size_t, std::int64_t*);
template void kron<QOps>(const QOps&, const mpq_class*, std::size_t, std::size_t,
                         const mpq_class*, std::size_t, std::size_t, mpq_class*);

}  // namespace tenring::kernels::par

namespace tenring::kernels {

std::int64_t FpOps::inv(std::int64_t a) const {
  std::int64_t t = 0, newt = 1, r = p, newr = a;
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  return t < 0 ? t + p : t;
}

}  // namespace tenring::kernels
