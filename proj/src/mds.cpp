#include "qbounds/mds.hpp"

#include <stdexcept>
#include <string>

#include "qbounds/krawtchouk.hpp"

namespace qbounds {

namespace {

long to_long(const BigInt& v) {
  if (!v.fits_slong_p()) {
    throw std::overflow_error("mds: length bound does not fit a long: " +
                              to_string(v));
  }
  return v.get_si();
}

}  // namespace

long mds_max_length_e1(int q) {
  if (q < 2) throw std::domain_error("mds_max_length_e1: q must be >= 2");
  return to_long(BigInt(q) * q + 1);
}

long mds_max_length_e2_upper(int q) {
  if (q < 2) throw std::domain_error("mds_max_length_e2_upper: q must be >= 2");
  const BigInt Q = BigInt(q) * q;
  const BigInt disc = (Q - 3) * (Q - 3) + 8 * (power(BigInt(q), 8) - 1);
  const BigInt root = isqrt_floor(disc).root;
  // floor((Q-3 + sqrt(disc)) / (2(Q-1))); the open unit interval above the
  // floor sqrt contains no integer, so the integer floor root suffices.
  BigInt bound;
  mpz_fdiv_q(bound.get_mpz_t(), BigInt(Q - 3 + root).get_mpz_t(),
             BigInt(2 * (Q - 1)).get_mpz_t());
  return to_long(bound);
}

std::optional<long> mds_exclusion_scan(int q, int e, long n_max) {
  if (q < 2) throw std::domain_error("mds_exclusion_scan: q must be >= 2");
  if (e < 1) throw std::domain_error("mds_exclusion_scan: e must be >= 1");
  const long n_lo = 2 * static_cast<long>(e) + 1;
  if (n_max < n_lo) {
    throw std::domain_error("mds_exclusion_scan: need n_max >= 2e+1");
  }
  const BigInt cap = power(BigInt(q), 4 * static_cast<unsigned long>(e));
  std::optional<long> best;
  for (long n = n_lo; n <= n_max; ++n) {
    if (sphere_volume(static_cast<int>(n), q, e) <= cap) {
      best = n;
    } else {
      break;  // volume is strictly increasing in n
    }
  }
  return best;
}

MdsLengthReport mds_report(int q, int e, long n_max) {
  MdsLengthReport report;
  report.q = q;
  report.e = e;
  report.reference_singleton_cap = to_long(2 * BigInt(q) * q - 2);
  if (e == 1) {
    report.formula_bound = mds_max_length_e1(q);
  } else if (e == 2) {
    report.formula_bound = mds_max_length_e2_upper(q);
  }
  report.scan_bound = mds_exclusion_scan(q, e, n_max);
  report.scan_exhausted = report.scan_bound && *report.scan_bound == n_max;
  report.agree = !report.formula_bound || !report.scan_bound ||
                 *report.formula_bound == *report.scan_bound;
  return report;
}

}  // namespace qbounds
