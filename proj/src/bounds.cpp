#include "qbounds/bounds.hpp"

#include <string>

#include "qbounds/krawtchouk.hpp"

namespace qbounds {

void validate(const CodeParams& p) {
  if (p.n < 1) throw std::domain_error("code params: n must be >= 1");
  if (p.q < 2) throw std::domain_error("code params: q must be >= 2");
  if (p.d < 1 || p.d > p.n) {
    throw std::domain_error("code params: need 1 <= d <= n, got d=" +
                            std::to_string(p.d) + ", n=" +
                            std::to_string(p.n));
  }
  if (p.k < 0 || p.k > p.n) {
    throw std::domain_error("code params: need 0 <= k <= n, got k=" +
                            std::to_string(p.k));
  }
}

Rational singleton_bound(int n, int d, int q) {
  if (n < 1 || d < 1 || q < 2) {
    throw std::domain_error("singleton_bound: need n >= 1, d >= 1, q >= 2");
  }
  const long exp = static_cast<long>(n) - 2 * d + 2;
  const BigInt p = power(BigInt(q), static_cast<unsigned long>(std::abs(exp)));
  return exp >= 0 ? Rational(p) : Rational(BigInt(1), p);
}

Rational hamming_bound(int n, int d, int q) {
  if (d < 1 || d > n) {
    throw std::domain_error("hamming_bound: need 1 <= d <= n");
  }
  const int e = (d - 1) / 2;
  return Rational(power(BigInt(q), static_cast<unsigned long>(n))) /
         Rational(sphere_volume(n, q, e));
}

HammingApplicability hamming_applicability(int d) {
  if (d < 1) throw std::domain_error("hamming_applicability: d must be >= 1");
  return (d == 3 || d == 5) ? HammingApplicability::kDegenerateValidated
                            : HammingApplicability::kPureOnly;
}

BoundReport check_code(const CodeParams& params) {
  validate(params);
  BoundReport report;
  report.params = params;
  report.singleton_exponent = params.n - 2 * params.d + 2;
  report.singleton_max_k = singleton_bound(params.n, params.d, params.q);
  report.hamming_max_k = hamming_bound(params.n, params.d, params.q);
  report.applicability = hamming_applicability(params.d);

  if (params.k == 0) return report;  // K = 1 is outside the K > 1 hypothesis

  const Rational K(power(BigInt(params.q), static_cast<unsigned long>(params.k)));
  report.singleton = K <= report.singleton_max_k ? BoundStatus::kSatisfied
                                                 : BoundStatus::kViolated;
  report.hamming = K <= report.hamming_max_k ? BoundStatus::kSatisfied
                                             : BoundStatus::kViolated;
  report.mds = K == report.singleton_max_k;
  report.perfect = K == report.hamming_max_k;
  return report;
}

const char* to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::kSatisfied: return "true";
    case BoundStatus::kViolated: return "false";
    case BoundStatus::kNotApplicable: return "na";
  }
  return "?";
}

const char* to_string(HammingApplicability a) {
  return a == HammingApplicability::kDegenerateValidated
             ? "degenerate-validated"
             : "pure-only";
}

}  // namespace qbounds
