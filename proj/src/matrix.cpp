#include "tenring/matrix.hpp"

#include <sstream>

#include "tenring/kernels.hpp"

namespace tenring {

using kernels::FpOps;
using kernels::QOps;

bool is_prime_int(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::int64_t p) {
  require(p >= 2 && p < (std::int64_t(1) << 31), Errc::ValidationError,
          "prime field modulus must satisfy 2 <= p < 2^31");
  require(is_prime_int(p), Errc::ValidationError, std::to_string(p) + " is not prime");
  return FieldSpec{FieldKind::Prime, p};
}

Matrix::Matrix(FieldSpec f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols) {
  if (f.is_prime())
    data_ = FpVec(rows * cols, 0);
  else
    data_ = QVec(rows * cols, mpq_class(0));
}

Matrix Matrix::identity(FieldSpec f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::basis_column(FieldSpec f, std::size_t n, std::size_t i) {
  Matrix m(f, n, 1);
  m.set(i, 0, 1);
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, std::int64_t v) {
  if (is_fp()) {
    std::int64_t r = v % field_.p;
    if (r < 0) r += field_.p;
    fp_data()[i * cols_ + j] = r;
  } else {
    q_data()[i * cols_ + j] = mpq_class(static_cast<long>(v));
  }
}

void Matrix::set(std::size_t i, std::size_t j, const mpq_class& v) {
  require(!is_fp(), Errc::FieldMismatch, "rational entry into a prime-field matrix");
  q_data()[i * cols_ + j] = v;
}

void Matrix::set_from_string(std::size_t i, std::size_t j, const std::string& s) {
  if (is_fp()) {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(s, &pos);
      require(pos == s.size(), Errc::ParseError, "bad field entry '" + s + "'");
      set(i, j, v);
    } catch (const std::logic_error&) {
      fail(Errc::ParseError, "bad field entry '" + s + "'");
    }
  } else {
    mpq_class q;
    if (q.set_str(s, 10) != 0) fail(Errc::ParseError, "bad rational entry '" + s + "'");
    require(sgn(q.get_den()) != 0, Errc::ParseError, "zero denominator in '" + s + "'");
    q.canonicalize();
    q_data()[i * cols_ + j] = q;
  }
}

void Matrix::copy_entry(std::size_t i, std::size_t j, const Matrix& src, std::size_t si,
                        std::size_t sj) {
  require_same_field(field_, src.field_);
  if (is_fp())
    fp_data()[i * cols_ + j] = src.fp_data()[si * src.cols_ + sj];
  else
    q_data()[i * cols_ + j] = src.q_data()[si * src.cols_ + sj];
}

void Matrix::add_entry(std::size_t i, std::size_t j, const Matrix& src, std::size_t si,
                       std::size_t sj) {
  require_same_field(field_, src.field_);
  if (is_fp()) {
    FpOps F{field_.p};
    auto& e = fp_data()[i * cols_ + j];
    e = F.add(e, src.fp_data()[si * src.cols_ + sj]);
  } else {
    q_data()[i * cols_ + j] += src.q_data()[si * src.cols_ + sj];
  }
}

bool Matrix::entry_is_zero(std::size_t i, std::size_t j) const {
  return is_fp() ? fp_data()[i * cols_ + j] == 0 : sgn(q_data()[i * cols_ + j]) == 0;
}

bool Matrix::entry_is_one(std::size_t i, std::size_t j) const {
  return is_fp() ? fp_data()[i * cols_ + j] == 1 % field_.p
                 : q_data()[i * cols_ + j] == 1;
}

std::string Matrix::entry_string(std::size_t i, std::size_t j) const {
  if (is_fp()) return std::to_string(fp_data()[i * cols_ + j]);
  return q_data()[i * cols_ + j].get_str();
}

std::int64_t Matrix::fp_at(std::size_t i, std::size_t j) const {
  return fp_data()[i * cols_ + j];
}

const mpq_class& Matrix::q_at(std::size_t i, std::size_t j) const {
  return q_data()[i * cols_ + j];
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_same_field(field_, rhs.field_);
  require(cols_ == rhs.rows_, Errc::DimensionMismatch,
          "matmul " + std::to_string(rows_) + "x" + std::to_string(cols_) + " * " +
              std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  Matrix out(field_, rows_, rhs.cols_);
  if (rows_ == 0 || rhs.cols_ == 0 || cols_ == 0) return out;
  if (is_fp()) {
    FpOps F{field_.p};
    kernels::par::matmul(F, fp_data().data(), rows_, cols_, rhs.fp_data().data(), rhs.cols_,
                         out.fp_data().data());
  } else {
    QOps F;
    kernels::par::matmul(F, q_data().data(), rows_, cols_, rhs.q_data().data(), rhs.cols_,
                         out.q_data().data());
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_same_field(field_, rhs.field_);
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, Errc::DimensionMismatch, "matrix add");
  Matrix out(field_, rows_, cols_);
  if (is_fp()) {
    FpOps F{field_.p};
    for (std::size_t t = 0; t < size(); ++t)
      out.fp_data()[t] = F.add(fp_data()[t], rhs.fp_data()[t]);
  } else {
    for (std::size_t t = 0; t < size(); ++t) out.q_data()[t] = q_data()[t] + rhs.q_data()[t];
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  require_same_field(field_, rhs.field_);
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, Errc::DimensionMismatch, "matrix sub");
  Matrix out(field_, rows_, cols_);
  if (is_fp()) {
    FpOps F{field_.p};
    for (std::size_t t = 0; t < size(); ++t)
      out.fp_data()[t] = F.sub(fp_data()[t], rhs.fp_data()[t]);
  } else {
    for (std::size_t t = 0; t < size(); ++t) out.q_data()[t] = q_data()[t] - rhs.q_data()[t];
  }
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out(field_, rows_, cols_);
  if (is_fp()) {
    FpOps F{field_.p};
    for (std::size_t t = 0; t < size(); ++t) out.fp_data()[t] = F.neg(fp_data()[t]);
  } else {
    for (std::size_t t = 0; t < size(); ++t) out.q_data()[t] = -q_data()[t];
  }
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
  if (field_ != rhs.field_ || rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
  if (is_fp()) return fp_data() == rhs.fp_data();
  const auto& a = q_data();
  const auto& b = rhs.q_data();
  for (std::size_t t = 0; t < size(); ++t)
    if (a[t] != b[t]) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.copy_entry(j, i, *this, i, j);
  return out;
}

Matrix Matrix::scaled_by(const Matrix& src, std::size_t si, std::size_t sj) const {
  require_same_field(field_, src.field_);
  Matrix out(field_, rows_, cols_);
  if (is_fp()) {
    FpOps F{field_.p};
    std::int64_t s = src.fp_data()[si * src.cols_ + sj];
    for (std::size_t t = 0; t < size(); ++t) out.fp_data()[t] = F.mul(fp_data()[t], s);
  } else {
    const mpq_class& s = src.q_data()[si * src.cols_ + sj];
    for (std::size_t t = 0; t < size(); ++t) out.q_data()[t] = q_data()[t] * s;
  }
  return out;
}

bool Matrix::is_zero() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!entry_is_zero(i, j)) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? !entry_is_one(i, j) : !entry_is_zero(i, j)) return false;
    }
  return true;
}

Matrix Matrix::trace() const {
  require(rows_ == cols_, Errc::DimensionMismatch, "trace of non-square matrix");
  Matrix out(field_, 1, 1);
  for (std::size_t i = 0; i < rows_; ++i) out.add_entry(0, 0, *this, i, i);
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << " over " << field_.to_string() << "\n";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "  [";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << entry_string(i, j);
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace tenring
