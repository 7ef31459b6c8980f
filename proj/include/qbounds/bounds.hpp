#pragma once

#include "qbounds/exact.hpp"

namespace qbounds {

/// Parameters ((n, K, d))_q with K = q^k (stabilizer convention). The
/// dimension is carried as the exponent k so equality checks against the
/// rational bounds stay exact.
struct CodeParams {
  int n = 1;  // length, >= 1
  int k = 0;  // logical dimension exponent, 0 <= k <= n
  int d = 1;  // minimum distance, 1 <= d <= n
  int q = 2;  // field size, >= 2
};

/// Throws std::domain_error when the invariants above are violated.
void validate(const CodeParams& params);

enum class BoundStatus { kSatisfied, kViolated, kNotApplicable };

enum class HammingApplicability { kPureOnly, kDegenerateValidated };

struct BoundReport {
  CodeParams params;
  int singleton_exponent = 0;       // n - 2d + 2, may be negative
  Rational singleton_max_k;         // q^(n-2d+2) exact; < 1 means no K > 1 fits
  Rational hamming_max_k;           // q^n / V(n, floor((d-1)/2))
  BoundStatus singleton = BoundStatus::kNotApplicable;
  BoundStatus hamming = BoundStatus::kNotApplicable;
  bool mds = false;      // meets the first bound with equality (k >= 1)
  bool perfect = false;  // meets the second bound with equality (k >= 1)
  HammingApplicability applicability = HammingApplicability::kPureOnly;
};

/// q^(n-2d+2), exact. Negative exponents yield the exact rational < 1,
/// reported by callers as "no K > 1 admissible".
Rational singleton_bound(int n, int d, int q);

/// q^n / sphere_volume(n, q, floor((d-1)/2)), exact.
Rational hamming_bound(int n, int d, int q);

/// Whether the sphere-packing bound is known to cover degenerate codes at
/// this distance (d in {3, 5}) or only pure ones.
HammingApplicability hamming_applicability(int d);

/// Evaluates both bounds exactly and sets equality/violation flags. k = 0
/// codes are outside the K > 1 hypothesis of both bounds, so their statuses
/// are kNotApplicable and never counted as violations.
BoundReport check_code(const CodeParams& params);

const char* to_string(BoundStatus s);
const char* to_string(HammingApplicability a);

}  // namespace qbounds
