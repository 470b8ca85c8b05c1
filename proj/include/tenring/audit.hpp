#ifndef TENRING_AUDIT_HPP
#define TENRING_AUDIT_HPP

#include <iosfwd>

#include "tenring/scenario.hpp"

namespace tenring {

enum class Verdict { PASS, FAIL, INCONCLUSIVE };
const char* verdict_name(Verdict v);

struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::INCONCLUSIVE;
  std::string evidence_json;  // serialized object with deterministic content
  double elapsed_s = 0;       // text output only, never in the json report
};

struct AuditReport {
  std::string scenario_name;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;  // ordered by check name

  bool any(Verdict v) const;
  // 0 all PASS; 1 any FAIL; 3 any INCONCLUSIVE (and no FAIL)
  int exit_code() const;
};

AuditReport run_audit(const Realized& rz);

std::string emit_text(const AuditReport& r);
std::string emit_json(const AuditReport& r);

const std::vector<std::string>& audit_check_names();

// the fixture battery behind the `selftest` subcommand; returns the number
// of failures and prints one line per fixture
std::size_t run_selftest(std::ostream& os);

// deterministic battery of random Gorenstein-certifiable scenarios with
// nilpotent perfect bimodules (generation is rejection-sampled by actual
// perfectness checks)
std::vector<Scenario> random_battery(std::size_t count, std::uint64_t seed);

}  // namespace tenring

#endif
