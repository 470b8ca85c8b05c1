#ifndef TENRING_MATRIX_HPP
#define TENRING_MATRIX_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "tenring/field.hpp"

namespace tenring {

// Dense matrix over Q (GMP rationals, always canonical) or F_p (residues in
// [0, p)). Row-major storage; this layout is also the serialization order.
// Immutable by convention once handed out of a constructing routine; the
// mutating setters exist for assembly.
class Matrix {
 public:
  using FpVec = std::vector<std::int64_t>;
  using QVec = std::vector<mpq_class>;

  Matrix() : field_(FieldSpec::rationals()), rows_(0), cols_(0), data_(QVec{}) {}
  Matrix(FieldSpec f, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec f, std::size_t n);
  static Matrix zero(FieldSpec f, std::size_t rows, std::size_t cols) {
    return Matrix(f, rows, cols);
  }
  // n x 1 standard basis column
  static Matrix basis_column(FieldSpec f, std::size_t n, std::size_t i);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return rows_ * cols_; }

  bool is_fp() const { return field_.is_prime(); }

  // entry assembly / inspection
  void set(std::size_t i, std::size_t j, std::int64_t v);
  void set(std::size_t i, std::size_t j, const mpq_class& v);
  void set_from_string(std::size_t i, std::size_t j, const std::string& s);
  void copy_entry(std::size_t i, std::size_t j, const Matrix& src, std::size_t si,
                  std::size_t sj);
  void add_entry(std::size_t i, std::size_t j, const Matrix& src, std::size_t si,
                 std::size_t sj);  // this(i,j) += src(si,sj)
  bool entry_is_zero(std::size_t i, std::size_t j) const;
  bool entry_is_one(std::size_t i, std::size_t j) const;
  std::string entry_string(std::size_t i, std::size_t j) const;

  std::int64_t fp_at(std::size_t i, std::size_t j) const;
  const mpq_class& q_at(std::size_t i, std::size_t j) const;

  // raw storage for kernels
  FpVec& fp_data() { return std::get<FpVec>(data_); }
  const FpVec& fp_data() const { return std::get<FpVec>(data_); }
  QVec& q_data() { return std::get<QVec>(data_); }
  const QVec& q_data() const { return std::get<QVec>(data_); }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;
  bool operator==(const Matrix& rhs) const;
  bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

  Matrix transpose() const;
  // every entry multiplied by src(si, sj)
  Matrix scaled_by(const Matrix& src, std::size_t si, std::size_t sj) const;
  bool is_zero() const;
  bool is_identity() const;
  Matrix trace() const;  // 1x1

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::variant<FpVec, QVec> data_;
};

}  // namespace tenring

#endif
