#include "tenring/algebra.hpp"

#include <map>
#include <sstream>

namespace tenring {

namespace {

Matrix column_of(const Matrix& m, std::size_t j) { return select_columns(m, {j}); }

// closure of span(unit, generators) under multiplication by generators
void check_generating(const FdAlgebra& a, const std::vector<std::size_t>& gens) {
  Matrix span = a.unit();
  for (std::size_t g : gens) span = hstack(span, Matrix::basis_column(a.field(), a.dim(), g));
  span = column_space(span).basis;
  for (;;) {
    std::vector<Matrix> parts{span};
    for (std::size_t g : gens) parts.push_back(a.left_mult()[g] * span);
    Matrix bigger = column_space(hstack(parts, a.field(), a.dim())).basis;
    if (bigger.cols() == span.cols()) break;
    span = bigger;
  }
  require(span.cols() == a.dim(), Errc::ValidationError,
          "designated generators do not generate the algebra");
}

void check_radical(const FdAlgebra& a, const Matrix& rad) {
  const std::size_t n = a.dim();
  // two-sided ideal
  for (std::size_t i = 0; i < n; ++i) {
    if (!columns_contained_in(a.left_mult()[i] * rad, rad))
      fail(Errc::RadicalInvalid, "radical is not a left ideal");
    Matrix right_cols(a.field(), n, rad.cols());
    for (std::size_t c = 0; c < rad.cols(); ++c) {
      Matrix rc = a.multiply(column_of(rad, c), Matrix::basis_column(a.field(), n, i));
      for (std::size_t r = 0; r < n; ++r) right_cols.copy_entry(r, c, rc, r, 0);
    }
    if (!columns_contained_in(right_cols, rad))
      fail(Errc::RadicalInvalid, "radical is not a right ideal");
  }
  // nilpotent: J^{m+1} = J * J^m shrinks to zero
  Matrix power = rad;
  for (std::size_t step = 0; step <= n && power.cols() > 0; ++step) {
    std::vector<Matrix> prods;
    for (std::size_t i = 0; i < rad.cols(); ++i)
      prods.push_back(a.left_mult_of(column_of(rad, i)) * power);
    Matrix next = column_space(hstack(prods, a.field(), n)).basis;
    require(next.cols() < power.cols() || power.cols() == 0, Errc::RadicalInvalid,
            "radical is not nilpotent");
    power = next;
  }
  require(power.cols() == 0, Errc::RadicalInvalid, "radical is not nilpotent");

  // semisimple quotient, certified by a nondegenerate trace form on a/J.
  // Valid in every characteristic as a sufficient criterion; inputs whose
  // quotient trace form degenerates are rejected.
  auto q = quotient_by_columns(rad, n);
  std::size_t qd = q.proj.rows();
  std::vector<Matrix> lq;
  for (std::size_t t = 0; t < qd; ++t)
    lq.push_back(q.proj * a.left_mult_of(column_of(q.section, t)) * q.section);
  Matrix gram(a.field(), qd, qd);
  for (std::size_t t = 0; t < qd; ++t)
    for (std::size_t u = 0; u < qd; ++u) gram.copy_entry(t, u, (lq[t] * lq[u]).trace(), 0, 0);
  if (kernel_basis(gram).cols() != 0)
    fail(Errc::RadicalInvalid,
         "quotient by the supplied radical has a degenerate trace form; "
         "cannot certify the quotient semisimple");
}

}  // namespace

Matrix trace_form_radical(const std::vector<Matrix>& left_mult, FieldSpec f) {
  require(f.is_rationals(), Errc::RadicalUnavailable,
          "trace-form radical computation is only valid over the rationals");
  std::size_t n = left_mult.size();
  Matrix gram(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gram.copy_entry(i, j, (left_mult[i] * left_mult[j]).trace(), 0, 0);
  return kernel_basis(gram);
}

AlgebraPtr FdAlgebra::create(FieldSpec field, std::vector<std::string> basis_labels,
                             std::vector<Matrix> left_mult, Matrix unit,
                             std::vector<Matrix> idempotents, std::optional<Matrix> radical,
                             AlgebraOrigin origin, std::vector<std::size_t> generators,
                             std::vector<Path> basis_paths) {
  auto a = std::shared_ptr<FdAlgebra>(new FdAlgebra());
  a->field_ = field;
  a->basis_paths_ = std::move(basis_paths);
  a->dim_ = left_mult.size();
  require(a->dim_ > 0, Errc::ValidationError, "algebra must have positive dimension");
  require(basis_labels.size() == a->dim_, Errc::ValidationError, "basis label count");
  a->labels_ = std::move(basis_labels);
  for (const Matrix& l : left_mult) {
    require_same_field(l.field(), field);
    require(l.rows() == a->dim_ && l.cols() == a->dim_, Errc::DimensionMismatch,
            "left multiplication table shape");
  }
  a->left_mult_ = std::move(left_mult);
  require(unit.rows() == a->dim_ && unit.cols() == 1, Errc::BadUnit, "unit shape");
  a->unit_ = std::move(unit);
  a->idempotents_ = std::move(idempotents);
  a->origin_ = std::move(origin);
  a->generators_ = std::move(generators);

  const std::size_t n = a->dim_;

  // associativity: L_i L_j = L_{b_i b_j} for all basis pairs
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix lhs = a->left_mult_[i] * a->left_mult_[j];
      Matrix rhs = a->left_mult_of(column_of(a->left_mult_[i], j));
      if (lhs != rhs)
        fail(Errc::NotAssociative, "b_" + std::to_string(i) + " * b_" + std::to_string(j) +
                                       " violates associativity");
    }

  if (!a->left_mult_of(a->unit_).is_identity() || !a->right_mult_of(a->unit_).is_identity())
    fail(Errc::BadUnit, "unit is not a two-sided identity");

  require(!a->idempotents_.empty(), Errc::BadIdempotents, "need at least one idempotent");
  Matrix esum(field, n, 1);
  for (std::size_t i = 0; i < a->idempotents_.size(); ++i) {
    const Matrix& ei = a->idempotents_[i];
    require(ei.rows() == n && ei.cols() == 1, Errc::BadIdempotents, "idempotent shape");
    for (std::size_t j = 0; j < a->idempotents_.size(); ++j) {
      Matrix prod = a->multiply(ei, a->idempotents_[j]);
      Matrix expect = (i == j) ? ei : Matrix(field, n, 1);
      if (prod != expect) fail(Errc::BadIdempotents, "idempotents are not orthogonal");
    }
    esum = esum + ei;
  }
  if (esum != a->unit_) fail(Errc::BadIdempotents, "idempotents do not sum to the unit");

  if (radical) {
    require_same_field(radical->field(), field);
    require(radical->cols() == 0 || radical->rows() == n, Errc::RadicalInvalid,
            "radical shape");
    Matrix rad = radical->cols() == 0 ? Matrix(field, n, 0) : column_space(*radical).basis;
    check_radical(*a, rad);
    a->radical_ = std::move(rad);
  }

  if (a->generators_.empty())
    for (std::size_t i = 0; i < n; ++i) a->generators_.push_back(i);
  for (std::size_t g : a->generators_)
    require(g < n, Errc::ValidationError, "generator index out of range");
  check_generating(*a, a->generators_);

  return a;
}

const Matrix& FdAlgebra::radical() const {
  if (!radical_)
    fail(Errc::RadicalUnavailable,
         "no radical available for this algebra (raw origin over F_p without one)");
  return *radical_;
}

Matrix FdAlgebra::left_mult_of(const Matrix& coords) const {
  require(coords.rows() == dim_ && coords.cols() == 1, Errc::DimensionMismatch,
          "element coordinate shape");
  Matrix acc(field_, dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    if (coords.entry_is_zero(k, 0)) continue;
    acc = acc + left_mult_[k].scaled_by(coords, k, 0);
  }
  return acc;
}

Matrix FdAlgebra::right_mult_of(const Matrix& coords) const {
  require(coords.rows() == dim_ && coords.cols() == 1, Errc::DimensionMismatch,
          "element coordinate shape");
  // column j of R(c) is b_j * c = L_j c
  Matrix out(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Matrix col = left_mult_[j] * coords;
    for (std::size_t r = 0; r < dim_; ++r) out.copy_entry(r, j, col, r, 0);
  }
  return out;
}

Matrix FdAlgebra::multiply(const Matrix& x, const Matrix& y) const {
  return left_mult_of(x) * y;
}

std::size_t FdAlgebra::idempotent_index_of_label(const std::string& label) const {
  if (label.size() >= 2 && label[0] == 'e') {
    try {
      std::size_t pos = 0;
      unsigned long v = std::stoul(label.substr(1), &pos);
      if (pos + 1 == label.size() && v >= 1 && v <= idempotents_.size()) return v - 1;
    } catch (const std::logic_error&) {
    }
  }
  fail(Errc::ValidationError, "unknown idempotent label '" + label + "' (expected e1..e" +
                                  std::to_string(idempotents_.size()) + ")");
}

const std::vector<Path>& FdAlgebra::basis_paths() const {
  require(is_quiver_presented(), Errc::ValidationError,
          "basis paths only exist for quiver-presented algebras");
  return basis_paths_;
}

AlgebraPtr make_opposite(const FdAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Matrix> lop(n, Matrix(a.field(), n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) lop[i].copy_entry(k, j, a.left_mult()[j], k, i);

  AlgebraOrigin origin;
  std::vector<Path> op_paths;
  if (a.is_quiver_presented()) {
    origin.kind = AlgebraOrigin::Kind::QuiverPresented;
    origin.presentation = a.origin().presentation->reversed();
    for (const Path& p : a.basis_paths()) {
      Path rev;
      rev.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
      rev.source = p.target(a.origin().presentation->quiver);
      op_paths.push_back(std::move(rev));
    }
  }

  std::optional<Matrix> rad;
  if (a.has_radical()) rad = a.radical();
  return FdAlgebra::create(a.field(), a.basis_labels(), std::move(lop), a.unit(),
                           a.idempotents(), std::move(rad), std::move(origin),
                           a.generators(), std::move(op_paths));
}

AlgebraPtr FdAlgebra::opposite() const {
  std::lock_guard<std::mutex> lk(cache_mu_);
  if (auto back = opposite_back_.lock()) return back;
  if (opposite_cache_) return opposite_cache_;
  AlgebraPtr op = make_opposite(*this);
  op->opposite_back_ = shared_from_this();
  opposite_cache_ = op;
  return op;
}

std::string FdAlgebra::describe() const {
  std::ostringstream os;
  os << "dim " << dim_ << " algebra over " << field_.to_string() << " with "
     << idempotents_.size() << " idempotent(s)";
  if (has_radical()) os << ", radical dim " << radical_->cols();
  return os.str();
}

AlgebraPtr build_from_quiver(const Presentation& p, FieldSpec f) {
  std::vector<Path> paths = enumerate_relation_free_paths(p);
  const std::size_t n = paths.size();
  const Quiver& q = p.quiver;

  std::map<std::vector<std::size_t>, std::size_t> index_by_arrows;
  std::map<std::size_t, std::size_t> vertex_index;  // e_i position
  std::vector<std::string> labels;
  for (std::size_t t = 0; t < n; ++t) {
    if (paths[t].arrows.empty())
      vertex_index[paths[t].source] = t;
    else
      index_by_arrows[paths[t].arrows] = t;
    labels.push_back(paths[t].label(q));
  }

  // product b_i * b_j is "traverse path j, then path i"
  auto product_index = [&](std::size_t i, std::size_t j) -> std::optional<std::size_t> {
    const Path &pi = paths[i], &pj = paths[j];
    if (pj.target(q) != pi.source) return std::nullopt;
    if (pi.arrows.empty()) return j;
    if (pj.arrows.empty()) return i;
    std::vector<std::size_t> cat = pj.arrows;
    cat.insert(cat.end(), pi.arrows.begin(), pi.arrows.end());
    auto it = index_by_arrows.find(cat);
    if (it == index_by_arrows.end()) return std::nullopt;  // hits a relation
    return it->second;
  };

  std::vector<Matrix> left(n, Matrix(f, n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (auto k = product_index(i, j)) left[i].set(*k, j, 1);

  Matrix unit(f, n, 1);
  std::vector<Matrix> idem;
  for (std::size_t v = 0; v < q.vertex_count; ++v) {
    unit.set(vertex_index.at(v), 0, 1);
    idem.push_back(Matrix::basis_column(f, n, vertex_index.at(v)));
  }

  Matrix rad(f, n, 0);
  std::vector<Matrix> rad_cols;
  std::vector<std::size_t> gens;
  for (std::size_t t = 0; t < n; ++t) {
    if (paths[t].length() >= 1) rad_cols.push_back(Matrix::basis_column(f, n, t));
    if (paths[t].length() <= 1) gens.push_back(t);
  }
  if (!rad_cols.empty()) rad = hstack(rad_cols, f, n);

  AlgebraOrigin origin{AlgebraOrigin::Kind::QuiverPresented, p};
  return FdAlgebra::create(f, std::move(labels), std::move(left), std::move(unit),
                           std::move(idem), std::move(rad), std::move(origin),
                           std::move(gens), std::move(paths));
}

AlgebraPtr build_from_structure_constants(FieldSpec f, std::vector<std::string> labels,
                                          std::vector<Matrix> left_mult, Matrix unit,
                                          std::vector<Matrix> idempotents,
                                          std::optional<Matrix> radical) {
  if (!radical) {
    if (f.is_prime())
      fail(Errc::RadicalRequired,
           "raw algebras over F_p must supply their radical; "
           "general char-p radical computation is out of scope");
    radical = trace_form_radical(left_mult, f);
  }
  return FdAlgebra::create(f, std::move(labels), std::move(left_mult), std::move(unit),
                           std::move(idempotents), std::move(radical),
                           AlgebraOrigin{AlgebraOrigin::Kind::Raw, std::nullopt}, {});
}

}  // namespace tenring
