#include "qbounds/krawtchouk.hpp"

#include <algorithm>
#include <string>

namespace qbounds {

KrawtchoukContext::KrawtchoukContext(int n, int q) : n_(n), q_(q) {
  if (n < 1) throw std::domain_error("KrawtchoukContext: n must be >= 1");
  if (q < 2) throw std::domain_error("KrawtchoukContext: q must be >= 2");
  q2m1_ = BigInt(q) * q - 1;
  q_pow_2n_ = power(BigInt(q), 2 * static_cast<unsigned long>(n));
  q2m1_pow_.reserve(n + 1);
  q2m1_pow_.emplace_back(1);
  for (int k = 1; k <= n; ++k) q2m1_pow_.push_back(q2m1_pow_.back() * q2m1_);
  table_.resize(static_cast<size_t>(n + 1) * (n + 1));
}

std::shared_ptr<const KrawtchoukContext> make_context(int n, int q) {
  return std::make_shared<const KrawtchoukContext>(n, q);
}

BigInt KrawtchoukContext::compute(int degree, int point) const {
  // Direct evaluation of the defining sum; the s-range below is exactly the
  // set of nonvanishing binomial terms.
  const int lo = std::max(0, degree - (n_ - point));
  const int hi = std::min(degree, point);
  BigInt acc(0);
  for (int s = lo; s <= hi; ++s) {
    BigInt term = q2m1_pow_[degree - s] * binomial(point, s) *
                  binomial(n_ - point, degree - s);
    if (s & 1) {
      acc -= term;
    } else {
      acc += term;
    }
  }
  return acc;
}

const BigInt& KrawtchoukContext::eval(int degree, int point) const {
  if (degree < 0 || degree > n_ || point < 0 || point > n_) {
    throw std::domain_error("krawtchouk_eval: degree/point outside [0," +
                            std::to_string(n_) + "]");
  }
  const size_t idx = static_cast<size_t>(degree) * (n_ + 1) + point;
  std::scoped_lock lock(mu_);
  if (!table_[idx]) table_[idx] = compute(degree, point);
  return *table_[idx];
}

BigInt sphere_volume(int n, int q, int e) {
  if (q < 2) throw std::domain_error("sphere_volume: q must be >= 2");
  if (e < 0 || e > n) {
    throw std::domain_error("sphere_volume: radius outside [0," +
                            std::to_string(n) + "]");
  }
  const BigInt q2m1 = BigInt(q) * q - 1;
  BigInt acc(0);
  BigInt pw(1);
  for (int i = 0; i <= e; ++i) {
    acc += binomial(n, i) * pw;
    pw *= q2m1;
  }
  return acc;
}

BigInt orthogonality_sum(const KrawtchoukContext& ctx, int a, int b) {
  const int n = ctx.length();
  if (a < 0 || a > n || b < 0 || b > n) {
    throw std::domain_error("orthogonality_sum: degree outside [0," +
                            std::to_string(n) + "]");
  }
  BigInt acc(0);
  for (int i = 0; i <= n; ++i) acc += ctx.eval(a, i) * ctx.eval(i, b);
  return acc;
}

std::vector<Rational> inverse_transform(const KrawtchoukContext& ctx,
                                        const std::vector<Rational>& values) {
  const int n = ctx.length();
  if (values.size() != static_cast<size_t>(n + 1)) {
    throw std::domain_error("inverse_transform: expected " +
                            std::to_string(n + 1) + " values, got " +
                            std::to_string(values.size()));
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    Rational acc;
    for (int x = 0; x <= n; ++x) acc += values[x] * Rational(ctx.eval(x, i));
    coeffs.push_back(acc / Rational(ctx.alphabet_power()));
  }
  return coeffs;
}

}  // namespace qbounds
