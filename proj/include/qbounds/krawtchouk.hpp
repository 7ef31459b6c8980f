#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "qbounds/exact.hpp"

namespace qbounds {

/// Fixes the pair (n, q) and evaluates the Krawtchouk polynomials K_j(x)
/// for the Hamming scheme over an alphabet of size q^2:
///
///   K_j(x) = sum_s (-1)^s (q^2-1)^(j-s) C(x,s) C(n-x,j-s)
///
/// Out-of-range binomial terms vanish. Evaluations are memoized in a lazy
/// (j, x) table; after construction a context is immutable from the outside
/// and safe to share across concurrent readers (the table is lock-protected).
class KrawtchoukContext {
 public:
  /// Throws std::domain_error unless n >= 1 and q >= 2.
  KrawtchoukContext(int n, int q);

  int length() const { return n_; }
  int field_size() const { return q_; }

  /// q^2 - 1, the weight factor of the scheme.
  const BigInt& weight_factor() const { return q2m1_; }

  /// q^(2n) = (q^2)^n, the total alphabet mass; also the orthogonality
  /// constant and the inverse-transform divisor.
  const BigInt& alphabet_power() const { return q_pow_2n_; }

  /// (q^2-1)^k for 0 <= k <= n, precomputed.
  const BigInt& weight_factor_pow(int k) const { return q2m1_pow_[k]; }

  /// K_degree(point). Throws std::domain_error outside [0, n] x [0, n].
  const BigInt& eval(int degree, int point) const;

 private:
  BigInt compute(int degree, int point) const;

  int n_;
  int q_;
  BigInt q2m1_;
  BigInt q_pow_2n_;
  std::vector<BigInt> q2m1_pow_;
  mutable std::vector<std::optional<BigInt>> table_;  // (n+1)^2, lazy
  mutable std::mutex mu_;
};

/// Shared-ownership convenience used by certificate builders.
std::shared_ptr<const KrawtchoukContext> make_context(int n, int q);

/// V(n, e) over alphabet q^2: sum_{i=0}^{e} C(n,i) (q^2-1)^i.
/// Throws std::domain_error unless 0 <= e <= n and q >= 2.
BigInt sphere_volume(int n, int q, int e);

/// sum_{i=0}^{n} K_a(i) K_i(b); equals q^(2n) when a == b and 0 otherwise.
BigInt orthogonality_sum(const KrawtchoukContext& ctx, int a, int b);

/// Recovers coefficients from point values: given f(0)..f(n), returns
/// f_0..f_n with f_i = q^(-2n) sum_x f(x) K_x(i), so that the forward
/// expansion f(x) = sum_j f_j K_j(x) reproduces the input exactly.
/// Throws std::domain_error unless exactly n+1 values are supplied.
std::vector<Rational> inverse_transform(const KrawtchoukContext& ctx,
                                        const std::vector<Rational>& values);

}  // namespace qbounds
