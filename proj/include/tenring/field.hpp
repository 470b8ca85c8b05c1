#ifndef TENRING_FIELD_HPP
#define TENRING_FIELD_HPP

#include <cstdint>
#include <string>

#include "tenring/errors.hpp"

namespace tenring {

enum class FieldKind { Rationals, Prime };

// The coefficient field of a computation: Q or F_p with p prime, p < 2^31.
// Every object in one computation carries the same FieldSpec; mixing is an error.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::int64_t p = 0;  // modulus when kind == Prime

  static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
  static FieldSpec prime(std::int64_t p);

  bool is_rationals() const { return kind == FieldKind::Rationals; }
  bool is_prime() const { return kind == FieldKind::Prime; }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind == b.kind && a.p == b.p;
  }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

  std::string to_string() const {
    return is_rationals() ? "QQ" : ("GF(" + std::to_string(p) + ")");
  }
};

bool is_prime_int(std::int64_t n);

inline void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  require(a == b, Errc::FieldMismatch,
          "expected " + a.to_string() + ", got " + b.to_string());
}

}  // namespace tenring

#endif
