#pragma once

#include <string>
#include <vector>

namespace qbounds {

/// Source of a check's expected value: a formula transcribed from the
/// published text, or a value derived independently (brute-force summation,
/// exhaustive scan, hand computation).
enum class Provenance { kPublishedFormula, kDerivedOracle };

/// Outcome of one cross-check. A paper-discrepancy means exact computation
/// contradicts the published claim; an implementation-bug-candidate means two
/// of our own independent routes disagree, which can never be blamed on the
/// source text.
enum class Verdict { kMatch, kPaperDiscrepancy, kImplementationBugCandidate };

struct Finding {
  std::string check_id;
  Provenance provenance = Provenance::kPublishedFormula;
  std::string expected;
  std::string actual;
  Verdict verdict = Verdict::kMatch;
};

struct FindingsLedger {
  std::vector<Finding> findings;

  bool has_bug_candidates() const;
  const Finding* find(const std::string& check_id) const;
};

struct VerifyOptions {
  int closed_form_n_max = 40;   // closed-form grid: n in [5, this], q in {2..5}
  int threshold_scan_max = 200; // dominance scans: n in [2e+1, this]
  int lp_cross_n_max = 80;      // full lp_bound cross-check horizon
  int mds_q_max = 9;            // length bounds checked for q in [2, this]
  int workers = 1;
};

/// Re-derives every published claim this library rests on by exact
/// computation and reports one finding per check. Discrepancies with the
/// source are reported, never silently corrected.
FindingsLedger run_paper_verification(const VerifyOptions& opts = {});

const char* to_string(Provenance p);
const char* to_string(Verdict v);

}  // namespace qbounds
