#ifndef TENRING_ERRORS_HPP
#define TENRING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tenring {

// Contract violations and invalid inputs. Mathematical outcomes that are not
// errors (NoSolution, Unknown, NotNilpotentUpTo, ...) are ordinary return
// values, never exceptions.
enum class Errc {
  DimensionMismatch,
  FieldMismatch,
  AlgebraMismatch,
  SideMismatch,
  NotAComplex,
  NotAssociative,
  BadUnit,
  BadIdempotents,
  RadicalRequired,
  RadicalUnavailable,
  RadicalInvalid,
  NotBasic,
  InfiniteDimensional,
  MalformedRelation,
  NotNilpotent,
  NotGorensteinProjective,
  NotInGmon,
  SolveFailed,
  ParseError,
  ValidationError,
  FieldUnsupported,
  Inconclusive,
  Internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::SideMismatch: return "SideMismatch";
    case Errc::NotAComplex: return "NotAComplex";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::BadUnit: return "BadUnit";
    case Errc::BadIdempotents: return "BadIdempotents";
    case Errc::RadicalRequired: return "RadicalRequired";
    case Errc::RadicalUnavailable: return "RadicalUnavailable";
    case Errc::RadicalInvalid: return "RadicalInvalid";
    case Errc::NotBasic: return "NotBasic";
    case Errc::InfiniteDimensional: return "InfiniteDimensional";
    case Errc::MalformedRelation: return "MalformedRelation";
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::NotGorensteinProjective: return "NotGorensteinProjective";
    case Errc::NotInGmon: return "NotInGmon";
    case Errc::SolveFailed: return "SolveFailed";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::FieldUnsupported: return "FieldUnsupported";
    case Errc::Inconclusive: return "Inconclusive";
    case Errc::Internal: return "Internal";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace tenring

#endif
