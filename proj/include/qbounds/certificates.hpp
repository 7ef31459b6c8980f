#pragma once

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qbounds/exact.hpp"
#include "qbounds/krawtchouk.hpp"

namespace qbounds {

/// A feasibility certificate: coefficients f_0..f_n of an expansion
/// f(x) = sum_j f_j K_j(x) together with the distinguished weight set S.
/// Any certificate passing verify_conditions yields the dimension bound
/// computed by lp_bound.
struct Certificate {
  std::shared_ptr<const KrawtchoukContext> ctx;
  std::vector<int> distinguished;  // S, ascending, nonempty, within [0, n]
  std::vector<Rational> coeffs;    // exactly n+1 entries
};

/// Validates the certificate invariants (S nonempty and within range,
/// coefficient count n+1). Throws std::domain_error on violation.
Certificate make_certificate(std::shared_ptr<const KrawtchoukContext> ctx,
                             std::vector<int> distinguished,
                             std::vector<Rational> coeffs);

/// The canonical sphere-packing certificate: f_j = (sum_{i<=e} K_i(j))^2
/// with S = {0, ..., 2e}. Requires n >= 2e+1 (otherwise S would exceed the
/// weight range), e >= 1, q >= 2.
Certificate hamming_certificate(int n, int q, int e);

/// f(x) = sum_j f_j K_j(x), exact. Throws std::domain_error for x outside [0, n].
Rational evaluate_certificate(const Certificate& cert, int x);

struct ConditionViolation {
  int x;
  Rational value;
  int condition;  // 1: coefficient positivity, 2: expansion nonpositive off S
};

struct ConditionReport {
  bool condition_i_ok = true;   // f_x > 0 on S, f_x >= 0 elsewhere
  bool condition_ii_ok = true;  // f(x) <= 0 on N \ S
  std::vector<ConditionViolation> violations;
  bool ok() const { return condition_i_ok && condition_ii_ok; }
};

/// Exact check of both feasibility conditions; violations are data, not errors.
ConditionReport verify_conditions(const Certificate& cert);

class CertificateInfeasible : public std::runtime_error {
 public:
  explicit CertificateInfeasible(const std::string& what)
      : std::runtime_error(what) {}
};

struct LpBoundResult {
  Rational bound;  // q^(-n) * max_{x in S} f(x)/f_x
  int argmax_x;    // smallest x achieving the max
};

/// Re-validates the conditions (throws CertificateInfeasible naming the first
/// violation) and returns the exact dimension bound with its argmax weight.
LpBoundResult lp_bound(const Certificate& cert);

/// The nine published closed forms for the e = 2 certificate, transcribed
/// term by term so that cross-checks can tell a wrong printed formula from a
/// wrong implementation. Requires n >= 5, q >= 2.
struct ClosedFormsE2 {
  std::array<BigInt, 5> coeff;  // f_0..f_4
  std::array<BigInt, 5> value;  // f(0)..f(4)
};
ClosedFormsE2 closed_form_e2(int n, int q);

struct RatioEntry {
  int x;
  Rational ratio;  // f(x)/f_x
};

/// Exact ratio f(x)/f_x for each x in S, ascending. Throws std::domain_error
/// naming x if some f_x is zero.
std::vector<RatioEntry> ratio_table(const Certificate& cert);

/// True iff f(0)/f_0 >= f(x)/f_x for every x in S of the Hamming certificate.
bool dominance_check(int n, int q, int e);

struct PerXThreshold {
  int x;
  std::optional<int> first_stable;  // smallest n from which dominance at x
                                    // holds for every scanned n' >= n;
                                    // nullopt = not stabilized in range
};

struct DominanceReport {
  int q = 0;
  int e = 0;
  int n_lo = 0;
  int n_hi = 0;
  std::vector<uint8_t> dominant;        // per n, indexed n - n_lo
  std::optional<int> stable_threshold;  // n*, nullopt = not stabilized
  std::vector<PerXThreshold> per_x;     // one entry per x in S = {0..2e}
};

/// Scans n from 2e+1 to n_max and reports per-n dominance, the minimal stable
/// threshold n*, and per-x first-stable thresholds. Thresholds are statements
/// about the scanned range only, never about all n. Per-n work is pure and
/// fanned out over `workers` threads; output is deterministic regardless of
/// the worker count.
DominanceReport dominance_threshold(int q, int e, int n_max, int workers = 1);

}  // namespace qbounds
