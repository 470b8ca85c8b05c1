#ifndef TENRING_GORENSTEIN_HPP
#define TENRING_GORENSTEIN_HPP

#include "tenring/enumerate.hpp"

namespace tenring {

// id of the regular module on the given side, computed as the projective
// dimension of its k-dual over the opposite side
HomDimVerdict injective_dimension(const AlgebraPtr& a, Side side, const HomologyOptions& opt);

struct GorensteinContext {
  AlgebraPtr algebra;
  HomDimVerdict left_id, right_id;
  HomDimVerdict gdim;  // the common value when both sides are finite

  std::optional<std::size_t> certified() const {
    return gdim.is_finite() ? std::optional<std::size_t>(gdim.n) : std::nullopt;
  }
};
GorensteinContext gorenstein_context(const AlgebraPtr& a, const HomologyOptions& opt);

// max of pd over the simple left modules
HomDimVerdict global_dimension(const AlgebraPtr& a, const HomologyOptions& opt);

enum class GpVerdict { GP, NotGP, Unknown };
const char* gp_verdict_name(GpVerdict v);

// Exact over a certified d-Gorenstein context (Ext^{1..d}(x, R) = 0);
// otherwise a bounded totally-reflexive test that may return Unknown.
GpVerdict gp_test(const Module& x, const GorensteinContext& ctx, const HomologyOptions& opt);

// smallest n with Omega^n(x) Gorenstein projective; throws Inconclusive when
// gp_test cannot decide within the bound
HomDimVerdict gpd(const Module& x, const GorensteinContext& ctx, const HomologyOptions& opt);

// forward coresolution 0 -> g -> P^0 -> ... -> P^n by projectives with
// Gorenstein projective cosyzygies (dualized resolution of star(g))
ResolutionSegment gp_coresolution(const Module& g, const GorensteinContext& ctx,
                                  std::size_t n, const HomologyOptions& opt);

struct CmFreeResult {
  bool cm_free = false;              // no witness found up to the cap
  std::optional<Module> witness;     // non-projective Gorenstein projective
  std::size_t dim_cap = 0;
};
CmFreeResult cm_free_scan(const AlgebraPtr& a, const GorensteinContext& ctx,
                          std::size_t dim_cap, const HomologyOptions& opt);

enum class GmonVerdict { InGmon, NotInGmon, Unknown };
const char* gmon_verdict_name(GmonVerdict v);
struct GmonResult {
  GmonVerdict verdict;
  std::string reason;
};
GmonResult gmon_test(const TensorRing& t, const RepPair& x, const GorensteinContext& ctx_r,
                     const HomologyOptions& opt);
GmonResult gmon_test(const TensorRing& t, const Module& x_over_t,
                     const GorensteinContext& ctx_r, const HomologyOptions& opt);

struct MFlatResult {
  enum class V { MFlat, NotMFlat, Unknown } verdict;
  std::size_t witness_i = 0, witness_s = 0;  // Tor_i(M^{(x)s}, y) != 0
};
MFlatResult m_flat_test(const TensorTower& tower, const Module& y,
                        const HomologyOptions& opt);

struct PerfectReport {
  HomDimVerdict pd_left, pd_right;
  enum class P { Pass, Fail, Unknown } condition_p = P::Unknown;
  std::size_t witness_i = 0, witness_j = 0;  // Tor_i(M, M^{(x)j}) != 0
  bool symmetric_agrees = false;  // the reversed form gives the same verdict
  enum class V { Yes, No, Unknown } perfect = V::Unknown;
};
PerfectReport perfect_test(const TensorTower& tower, const HomologyOptions& opt);

struct AdmissibleFailure {
  Side side;
  std::size_t family_index, power;
  std::string kind;  // "ext" or "tor"
};
struct AdmissibleReport {
  bool left_ok = true, right_ok = true;
  std::vector<AdmissibleFailure> failures;
  bool via_perfect = false;  // the perfectness sufficient condition holds
  PerfectReport perfect;
};
AdmissibleReport admissible_report(const TensorRing& t,
                                   const std::vector<Module>& left_family,
                                   const std::vector<Module>& right_family,
                                   const HomologyOptions& opt);

struct FrobeniusEmbedding {
  Matrix embedding;  // X -> Ind(P).base, an injective T-module map
  Induced ind_p;
  RepPair cokernel;  // verified InGmon
};
FrobeniusEmbedding frobenius_embedding(const TensorRing& t, const RepPair& x,
                                       const GorensteinContext& ctx_r,
                                       const HomologyOptions& opt);

}  // namespace tenring

#endif
