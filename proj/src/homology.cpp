#include "tenring/homology.hpp"

namespace tenring {

namespace {

Matrix vec_of(const Matrix& m) {
  Matrix v(m.field(), m.rows() * m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.copy_entry(i * m.cols() + j, 0, m, i, j);
  return v;
}

// Hom(d, y): Hom(p_prev, y) -> Hom(p_next, y), h |-> h o d, in the hom bases
Matrix precompose_matrix(const std::vector<Matrix>& basis_prev,
                         const std::vector<Matrix>& basis_next, const Matrix& d,
                         std::size_t y_dim, std::size_t next_dim, FieldSpec f) {
  Matrix flat = flatten_homs(basis_next, y_dim, next_dim, f);
  Matrix out(f, basis_next.size(), basis_prev.size());
  for (std::size_t j = 0; j < basis_prev.size(); ++j) {
    auto coords = solve(flat, vec_of(basis_prev[j] * d));
    require(coords.has_value(), Errc::Internal, "precomposition leaves the hom space");
    for (std::size_t r = 0; r < out.rows(); ++r) out.copy_entry(r, j, *coords, r, 0);
  }
  return out;
}

}  // namespace

std::string HomDimVerdict::to_string() const {
  switch (kind) {
    case Kind::Finite:
      return "Finite(" + std::to_string(n) + ")";
    case Kind::InfinitePeriodic:
      return "InfinitePeriodic(period " + std::to_string(period) + ", Omega^" +
             std::to_string(witness_i) + " ~ Omega^" + std::to_string(witness_j) + ")";
    case Kind::AtLeast:
      return "AtLeast(" + std::to_string(n) + ")";
  }
  return "?";
}

ResolutionSegment projective_resolution(const Module& x, std::size_t n) {
  ResolutionSegment seg;
  seg.target = x;
  Module current = x;
  Matrix incl_prev;  // kernel inclusion into the previous cover
  for (std::size_t step = 0; step <= n; ++step) {
    Cover c = projective_cover(current);
    if (step == 0) {
      seg.augmentation = c.map;
    } else {
      // differential P^{-step} -> P^{-step+1} through the kernel inclusion
      seg.differentials.push_back(incl_prev * c.map);
    }
    Matrix ker = kernel_basis(c.map);
    Module omega = submodule_on(c.proj, ker);
    seg.modules.push_back(std::move(c.proj));
    incl_prev = std::move(ker);
    current = std::move(omega);
  }

  // exactness sanity: interior homology vanishes and the augmentation is onto
  require(rank_of(seg.augmentation) == x.dim, Errc::Internal, "resolution not onto");
  if (n >= 1)
    require(homology_dim(seg.differentials[0], seg.augmentation) == 0, Errc::Internal,
            "resolution not exact at P^0");
  for (std::size_t i = 1; i < n; ++i)
    require(homology_dim(seg.differentials[i], seg.differentials[i - 1]) == 0,
            Errc::Internal, "resolution not exact at interior term");
  return seg;
}

HomDimVerdict pd_verdict(const Module& x, const HomologyOptions& opt) {
  require(opt.pd_bound >= 1, Errc::ValidationError, "pd bound must be >= 1");
  std::vector<Module> omegas{x};
  for (std::size_t n = 0; n <= opt.pd_bound; ++n) {
    if (omegas[n].dim == 0) return HomDimVerdict::finite(n == 0 ? 0 : n - 1);
    Cover c = projective_cover(omegas[n]);
    Matrix ker = kernel_basis(c.map);
    if (ker.cols() == 0) return HomDimVerdict::finite(n);
    if (n == opt.pd_bound) break;
    Module omega = submodule_on(c.proj, ker);
    for (std::size_t i = 0; i <= n; ++i) {
      if (omegas[i].dim != omega.dim || omegas[i].dim == 0) continue;
      IsoResult iso = is_isomorphic(omegas[i], omega, opt.iso_trials,
                                    opt.seed ^ (0x517cc1b727220a95ULL * (n + 1)));
      if (iso.yes()) return HomDimVerdict::periodic(i, n + 1);
    }
    omegas.push_back(std::move(omega));
  }
  return HomDimVerdict::at_least(opt.pd_bound);
}

std::size_t ext_dim(const Module& x, const Module& y, std::size_t i) {
  require_compatible(x, y);
  if (i == 0) return hom_dim(x, y);
  ResolutionSegment res = projective_resolution(x, i + 1);
  const FieldSpec f = x.field();
  std::vector<Matrix> b_prev = hom_basis(res.modules[i - 1], y);
  std::vector<Matrix> b_mid = hom_basis(res.modules[i], y);
  std::vector<Matrix> b_next = hom_basis(res.modules[i + 1], y);
  Matrix d_in = precompose_matrix(b_prev, b_mid, res.differentials[i - 1], y.dim,
                                  res.modules[i].dim, f);
  Matrix d_out = precompose_matrix(b_mid, b_next, res.differentials[i], y.dim,
                                   res.modules[i + 1].dim, f);
  return homology_dim(d_in, d_out);
}

namespace {

struct TensorChain {
  std::vector<std::size_t> dims;  // dims of y (x) P^j, j = 0..n
  std::vector<Matrix> maps;       // induced maps j -> j-1, j = 1..n
};

// tensor the resolution of x with the right module y
TensorChain tensor_with_resolution(const Module& y, const ResolutionSegment& res) {
  TensorChain ch;
  const FieldSpec f = y.field();
  const FdAlgebra& a = *y.algebra;
  std::vector<TensorSpace> spaces;
  for (const Module& p : res.modules)
    spaces.push_back(tensor_space(a, y.action, y.dim, p.action, p.dim));
  for (const TensorSpace& s : spaces) ch.dims.push_back(s.dim);
  Matrix idy = Matrix::identity(f, y.dim);
  for (std::size_t j = 1; j < res.modules.size(); ++j)
    ch.maps.push_back(spaces[j - 1].proj * kron(idy, res.differentials[j - 1]) *
                      spaces[j].section);
  return ch;
}

// tensor the resolution of y with the left module x (maps act on the left leg)
TensorChain tensor_resolution_with(const ResolutionSegment& res, const Module& x) {
  TensorChain ch;
  const FieldSpec f = x.field();
  const FdAlgebra& a = *x.algebra;
  std::vector<TensorSpace> spaces;
  for (const Module& q : res.modules)
    spaces.push_back(tensor_space(a, q.action, q.dim, x.action, x.dim));
  for (const TensorSpace& s : spaces) ch.dims.push_back(s.dim);
  Matrix idx = Matrix::identity(f, x.dim);
  for (std::size_t j = 1; j < res.modules.size(); ++j)
    ch.maps.push_back(spaces[j - 1].proj * kron(res.differentials[j - 1], idx) *
                      spaces[j].section);
  return ch;
}

std::size_t chain_homology_at(const TensorChain& ch, std::size_t i, FieldSpec f) {
  Matrix d_out = i == 0 ? Matrix(f, 0, ch.dims[0]) : ch.maps[i - 1];
  return homology_dim(ch.maps[i], d_out);
}

void require_tor_sides(const Module& y, const Module& x) {
  require(y.algebra.get() == x.algebra.get(), Errc::AlgebraMismatch,
          "Tor arguments live over different algebras");
  require(y.side == Side::Right && x.side == Side::Left, Errc::AlgebraMismatch,
          "Tor needs a right and a left module");
}

}  // namespace

std::size_t tor_dim(const Module& y, const Module& x, std::size_t i) {
  require_tor_sides(y, x);
  ResolutionSegment res = projective_resolution(x, i + 1);
  TensorChain ch = tensor_with_resolution(y, res);
  return chain_homology_at(ch, i, x.field());
}

std::size_t tor_dim_alt(const Module& y, const Module& x, std::size_t i) {
  require_tor_sides(y, x);
  ResolutionSegment res = projective_resolution(y, i + 1);
  TensorChain ch = tensor_resolution_with(res, x);
  return chain_homology_at(ch, i, x.field());
}

std::size_t tensor_dim(const Module& y, const Module& x) {
  require_tor_sides(y, x);
  return tensor_space(*x.algebra, y.action, y.dim, x.action, x.dim).dim;
}

}  // namespace tenring
