#include "tenring/enumerate.hpp"

#include <map>

namespace tenring {

namespace {

// dimension vectors (d_1..d_n) with sum <= cap, in lexicographic order
std::vector<std::vector<std::size_t>> dimension_vectors(std::size_t n, std::size_t cap) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(n, 0);
  for (;;) {
    std::size_t sum = 0;
    for (std::size_t d : cur) sum += d;
    if (sum <= cap) out.push_back(cur);
    std::size_t pos = n;
    while (pos > 0) {
      if (++cur[pos - 1] <= cap) break;
      cur[--pos] = 0;
    }
    if (pos == 0) break;
  }
  return out;
}

struct IsoBuckets {
  // fingerprint -> candidate indices; fingerprints are iso-invariant
  std::map<std::string, std::vector<std::size_t>> buckets;
};

std::string fingerprint(const Module& m) {
  std::string fp = "d" + std::to_string(m.dim);
  AlgebraPtr e = m.effective();
  for (std::size_t g : e->generators()) fp += ":" + std::to_string(rank_of(m.action[g]));
  fp += ":e" + std::to_string(hom_dim(m, m));
  return fp;
}

bool known_iso(const std::vector<Module>& mods, IsoBuckets& buckets, const Module& cand,
               const EnumerationOptions& opt) {
  std::string fp = fingerprint(cand);
  auto& bucket = buckets.buckets[fp];
  for (std::size_t idx : bucket)
    if (is_isomorphic(mods[idx], cand, opt.iso_trials, opt.seed).yes()) return true;
  bucket.push_back(mods.size());
  return false;
}

}  // namespace

std::vector<Module> enumerate_modules(const AlgebraPtr& a, Side side,
                                      const EnumerationOptions& opt) {
  require(a->field().is_prime(), Errc::FieldUnsupported,
          "exhaustive module enumeration needs a finite field");
  AlgebraPtr e = side == Side::Left ? a : a->opposite();
  require(e->is_quiver_presented(), Errc::FieldUnsupported,
          "exhaustive module enumeration needs a quiver presentation");
  const Presentation& pres = *e->origin().presentation;
  const Quiver& q = pres.quiver;
  const std::size_t nv = q.vertex_count;
  const std::int64_t p = a->field().p;
  const FieldSpec f = a->field();
  const std::vector<Path>& paths = e->basis_paths();

  std::vector<Module> out;
  IsoBuckets buckets;

  for (const auto& dv : dimension_vectors(nv, opt.dim_cap)) {
    std::vector<std::size_t> offset(nv, 0);
    std::size_t total = 0;
    for (std::size_t v = 0; v < nv; ++v) {
      offset[v] = total;
      total += dv[v];
    }

    std::size_t entries = 0;
    for (const Arrow& ar : q.arrows) entries += dv[ar.target] * dv[ar.source];
    double combos = 1;
    for (std::size_t t = 0; t < entries; ++t) {
      combos *= static_cast<double>(p);
      require(combos <= static_cast<double>(opt.work_budget), Errc::ValidationError,
              "enumeration work budget exceeded; lower dim_cap");
    }

    std::vector<std::int64_t> digits(entries, 0);
    for (bool more = true; more;) {
      // arrow matrices from the digit string
      std::vector<Matrix> arrow_mat;
      std::size_t t = 0;
      for (const Arrow& ar : q.arrows) {
        Matrix m(f, dv[ar.target], dv[ar.source]);
        for (std::size_t i = 0; i < dv[ar.target]; ++i)
          for (std::size_t j = 0; j < dv[ar.source]; ++j) m.set(i, j, digits[t++]);
        arrow_mat.push_back(std::move(m));
      }

      // monomial relations: the product along each relation path vanishes
      bool ok = true;
      for (const auto& rel : pres.relations) {
        Matrix prod = Matrix::identity(f, dv[q.arrows[rel[0]].source]);
        for (std::size_t step : rel) prod = arrow_mat[step] * prod;
        if (!prod.is_zero()) {
          ok = false;
          break;
        }
      }

      if (ok) {
        // assemble the action of every basis path
        std::vector<Matrix> act(e->dim(), Matrix(f, total, total));
        for (std::size_t b = 0; b < e->dim(); ++b) {
          const Path& path = paths[b];
          Matrix block = Matrix::identity(f, dv[path.source]);
          for (std::size_t step : path.arrows) block = arrow_mat[step] * block;
          std::size_t tv = path.target(q);
          for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j)
              act[b].copy_entry(offset[tv] + i, offset[path.source] + j, block, i, j);
        }
        Module cand = Module::make_unchecked(a, side, total, std::move(act));
        if (!opt.dedup || !known_iso(out, buckets, cand, opt)) out.push_back(std::move(cand));
      }

      std::size_t pos = 0;
      while (pos < entries) {
        if (++digits[pos] < p) break;
        digits[pos++] = 0;
      }
      more = pos < entries;
    }
  }
  return out;
}

std::vector<RepPair> enumerate_rep_pairs(const TensorRing& t, const EnumerationOptions& opt) {
  require(t.base()->field().is_prime(), Errc::FieldUnsupported,
          "exhaustive enumeration needs a finite field");
  const std::int64_t p = t.base()->field().p;
  std::vector<Module> bases = enumerate_modules(t.base(), Side::Left, opt);
  std::vector<RepPair> out;
  for (const Module& x : bases) {
    auto tower = shared_f_tower(t, x);
    std::vector<Matrix> homs = hom_basis((*tower)[1].module, x);
    const std::size_t h = homs.size();
    double combos = 1;
    for (std::size_t i = 0; i < h; ++i) {
      combos *= static_cast<double>(p);
      require(combos <= static_cast<double>(opt.work_budget), Errc::ValidationError,
              "structure-map enumeration exceeds the work budget");
    }
    std::vector<std::int64_t> digits(h, 0);
    for (bool more = true; more;) {
      Matrix u(x.field(), x.dim, (*tower)[1].module.dim);
      for (std::size_t i = 0; i < h; ++i) {
        if (digits[i] == 0) continue;
        Matrix c(x.field(), 1, 1);
        c.set(0, 0, digits[i]);
        u = u + homs[i].scaled_by(c, 0, 0);
      }
      out.push_back(RepPair{x, std::move(u), tower});
      std::size_t pos = 0;
      while (pos < h) {
        if (++digits[pos] < p) break;
        digits[pos++] = 0;
      }
      more = pos < h;
    }
  }
  return out;
}

std::vector<Module> enumerate_t_modules(const TensorRing& t, const EnumerationOptions& opt) {
  std::vector<RepPair> reps = enumerate_rep_pairs(t, opt);
  std::vector<Module> out;
  IsoBuckets buckets;
  for (const RepPair& rp : reps) {
    Module m = rep_to_module(t, rp);
    if (!opt.dedup || !known_iso(out, buckets, m, opt)) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace tenring
