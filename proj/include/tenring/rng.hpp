#ifndef TENRING_RNG_HPP
#define TENRING_RNG_HPP

#include <cstdint>
#include <random>
#include <string>

namespace tenring {

// Deterministic seeded generator. std::mt19937_64 has a portable specified
// output stream; we avoid std::*_distribution because those are
// implementation-defined and would break byte-identical reports.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return gen_(); }

  // uniform in [0, n); n > 0. Modulo bias is irrelevant at our sizes.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // uniform in [lo, hi] inclusive
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // independent stream for a named sub-task; derivation depends only on the
  // original seed and the salt, not on how much of this stream was consumed
  SeededRng fork(std::uint64_t salt) const {
    return SeededRng(seed_ ^ (salt * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

// stable FNV-1a for deriving per-check seeds from names
inline std::uint64_t hash_name(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : s) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
  return h;
}

}  // namespace tenring

#endif
