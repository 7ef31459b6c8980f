#pragma once

#include <optional>

#include "qbounds/exact.hpp"

namespace qbounds {

/// Maximal admissible lengths for codes meeting the first bound with
/// equality, per error radius e: closed forms for e in {1, 2} and a generic
/// exact exclusion scan for any e.
struct MdsLengthReport {
  int q = 0;
  int e = 0;
  std::optional<long> formula_bound;      // closed form, defined for e in {1,2}
  std::optional<long> scan_bound;         // nullopt = no length admissible
  bool scan_exhausted = false;            // still admissible at n_max
  bool agree = true;                      // formula == scan when both defined
  long reference_singleton_cap = 0;       // 2q^2 - 2, prior-work metadata only
};

/// Largest admissible length at e = 1: q^2 + 1.
long mds_max_length_e1(int q);

/// Largest admissible length at e = 2 via the positive root of
/// n^2(q^2-1)^2 - n(q^2-1)(q^2-3) - 2(q^8-1) <= 0, extracted with an exact
/// integer square root of the discriminant (q^2-3)^2 + 8(q^8-1). An exact
/// integer root is still admitted: equality of the two bounds does not
/// exclude a code meeting both.
long mds_max_length_e2_upper(int q);

/// Largest n <= n_max with sphere_volume(n, q, e) <= q^(4e); every larger n
/// is excluded by monotonicity. Exclusion is strict: volume == q^(4e) does
/// not exclude. Returns nullopt when even n = 2e+1 is excluded.
std::optional<long> mds_exclusion_scan(int q, int e, long n_max);

/// Runs both routes and cross-checks them; disagreement is surfaced in the
/// report (and by the verification suite), never silently resolved.
MdsLengthReport mds_report(int q, int e, long n_max = 4096);

}  // namespace qbounds
