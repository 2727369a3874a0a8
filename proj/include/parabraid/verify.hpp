#pragma once
// Verification suites with machine-readable reports.

#include <string>
#include <vector>

#include "parabraid/paint.hpp"
#include "parabraid/prover.hpp"

namespace parabraid {

enum class CheckStatus { Pass, Fail, Skipped, Unproven };
std::string status_str(CheckStatus s);

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::string witness;
};

struct CheckReport {
  std::string suite;
  std::string family;
  int rank = 0;
  std::string ring;
  std::vector<CheckResult> checks;  // sorted by id
  double elapsed_ms = 0;

  bool ok() const;  // no check failed
  int count(CheckStatus s) const;
  std::string to_json(bool with_timing = true) const;
  std::string to_text() const;
};

class VerifyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SuiteOptions {
  bool prove = true;  // attempt group-level certificates where a suite has them
  ProverBounds bounds = ProverBounds::from_env();
};

CheckReport check_phi_well_defined(const RootSystem& rs, const Ring& ring);
CheckReport check_pure_braid_lemma(const RootSystem& rs, const Ring& ring, const SuiteOptions& opt = {});
CheckReport check_psi_independence(const RootSystem& rs, const Ring& ring);
CheckReport check_kassel_reutenauer(const RootSystem& rs, const Ring& ring);
// Type D with rank 4 or 5.
CheckReport check_twin_twine(const RootSystem& rs, const Ring& ring, const SuiteOptions& opt = {});
// Type D: committed sign table against a fresh calibration and the relations it must satisfy.
CheckReport check_calibration(const RootSystem& rs);
// Named group-level certificates; stored copies live under data/derivations/certificates.
CheckReport check_certificates(const SuiteOptions& opt = {});

std::vector<std::string> suite_names();
CheckReport run_suite(const std::string& suite, const RootSystem& rs, const Ring& ring, const SuiteOptions& opt = {});

// Words of the twin identity at rank n: start of the slide and its exact right-hand side.
std::pair<ParamBraidWord, ParamBraidWord> twin_words(const RootSystem& rs, const Ring& ring);
std::pair<BraidWord, BraidWord> twine_words(const RootSystem& rs);

struct Certificate {
  std::string id;
  RootSystem rs;
  Ring ring;
  ParamBraidWord lhs, rhs;
  bool base_rules_only = false;
};
std::vector<Certificate> standard_certificates();

// File stem for a rule name or certificate id: [A-Za-z0-9-] kept, anything else becomes '_'.
std::string file_stem(const std::string& id);
// Rule and ring used for stored rule derivations of `rs`: "A3", "D4", ...
std::string system_tag(const RootSystem& rs);
Ring rule_ring(const RootSystem& rs);

// Each named statement and the check-id prefixes that exercise it.
struct CoverageItem {
  std::string item;
  std::string suite;
  std::string check_prefix;
};
const std::vector<CoverageItem>& coverage_manifest();

}  // namespace parabraid
