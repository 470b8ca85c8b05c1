#ifndef TENRING_KERNELS_HPP
#define TENRING_KERNELS_HPP

// Field-generic dense kernels. `serial` holds the plain reference
// implementations that the test suite treats as the oracle; `par` holds the
// production versions (OpenMP row/entry parallel, plus a bit-packed
// elimination fast path for F_2). Both produce identical output on identical
// input: pivoting is leftmost-nonzero/first-row in every variant, and every
// parallel update writes a disjoint slot.

#include <gmpxx.h>

#include <cstdint>
#include <cstddef>
#include <vector>

namespace tenring::kernels {

struct FpOps {
  std::int64_t p;
  using Elem = std::int64_t;
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const {
    Elem s = a - b;
    return s < 0 ? s + p : s;
  }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }  // p < 2^31: no overflow
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const;  // extended Euclid; a != 0
};

struct QOps {
  using Elem = mpq_class;
  Elem zero() const { return mpq_class(0); }
  Elem one() const { return mpq_class(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return 1 / a; }
};

struct RrefOut {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

namespace serial {

template <class Ops>
void matmul(const Ops& F, const typename Ops::Elem* a, std::size_t n, std::size_t k,
            const typename Ops::Elem* b, std::size_t m, typename Ops::Elem* out) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      typename Ops::Elem acc = F.zero();
      for (std::size_t t = 0; t < k; ++t) acc = F.add(acc, F.mul(a[i * k + t], b[t * m + j]));
      out[i * m + j] = acc;
    }
}

// full Gauss-Jordan: unique reduced row echelon form
template <class Ops>
RrefOut rref_in_place(const Ops& F, std::vector<typename Ops::Elem>& a, std::size_t rows,
                      std::size_t cols) {
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
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t k = 0; k < br; ++k)
      for (std::size_t j = 0; j < ac; ++j)
        for (std::size_t l = 0; l < bc; ++l)
          out[(i * br + k) * (ac * bc) + (j * bc + l)] = F.mul(a[i * ac + j], b[k * bc + l]);
}

}  // namespace serial

namespace par {

template <class Ops>
void matmul(const Ops& F, const typename Ops::Elem* a, std::size_t n, std::size_t k,
            const typename Ops::Elem* b, std::size_t m, typename Ops::Elem* out);

template <class Ops>
RrefOut rref_in_place(const Ops& F, std::vector<typename Ops::Elem>& a, std::size_t rows,
                      std::size_t cols);

template <class Ops>
void kron(const Ops& F, const typename Ops::Elem* a, std::size_t ar, std::size_t ac,
          const typename Ops::Elem* b, std::size_t br, std::size_t bc,
          typename Ops::Elem* out);

}  // namespace par

}  // namespace tenring::kernels

#endif
