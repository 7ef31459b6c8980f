#include "qbounds/certificates.hpp"

#include <algorithm>
#include <string>
#include <thread>

namespace qbounds {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::domain_error(msg);
}

// Integer-valued view of the Hamming certificate at one n: coefficients
// f_j = (sum_{i<=e} K_i(j))^2 and the expansion values f(x) for x in S.
// Everything stays in BigInt; the rational wrapper is only for the public
// Certificate type.
struct HammingData {
  std::vector<BigInt> coeffs;  // f_0..f_n
  std::vector<BigInt> values;  // f(x) for x = 0..2e
};

HammingData hamming_data(const KrawtchoukContext& ctx, int e) {
  const int n = ctx.length();
  HammingData d;
  d.coeffs.reserve(n + 1);
  for (int j = 0; j <= n; ++j) {
    BigInt g(0);
    for (int i = 0; i <= e; ++i) g += ctx.eval(i, j);
    d.coeffs.push_back(g * g);
  }
  d.values.reserve(2 * e + 1);
  for (int x = 0; x <= 2 * e; ++x) {
    BigInt acc(0);
    for (int j = 0; j <= n; ++j) acc += d.coeffs[j] * ctx.eval(j, x);
    d.values.push_back(acc);
  }
  return d;
}

void check_hamming_pre(int n, int q, int e) {
  require(e >= 1, "hamming_certificate: e must be >= 1");
  require(q >= 2, "hamming_certificate: q must be >= 2");
  require(n >= 2 * e + 1,
          "hamming_certificate: need n >= 2e+1, got n=" + std::to_string(n) +
              ", e=" + std::to_string(e));
}

// Per-x dominance flags f(0)/f_0 >= f(x)/f_x for x in {0..2e}, via exact
// cross-multiplication (coefficients are squares, hence nonnegative; a zero
// f_x makes the ratio undefined and counts as non-dominant).
std::vector<uint8_t> hamming_dominance_flags(int n, int q, int e) {
  check_hamming_pre(n, q, e);
  KrawtchoukContext ctx(n, q);
  const HammingData d = hamming_data(ctx, e);
  const BigInt& f0 = d.coeffs[0];
  const BigInt& v0 = d.values[0];
  std::vector<uint8_t> flags(2 * e + 1);
  for (int x = 0; x <= 2 * e; ++x) {
    const BigInt& fx = d.coeffs[x];
    if (sgn(fx) == 0) {
      flags[x] = 0;
      continue;
    }
    flags[x] = (v0 * fx >= d.values[x] * f0) ? 1 : 0;
  }
  return flags;
}

}  // namespace

Certificate make_certificate(std::shared_ptr<const KrawtchoukContext> ctx,
                             std::vector<int> distinguished,
                             std::vector<Rational> coeffs) {
  require(ctx != nullptr, "make_certificate: null context");
  const int n = ctx->length();
  require(!distinguished.empty(), "make_certificate: S must be nonempty");
  std::sort(distinguished.begin(), distinguished.end());
  distinguished.erase(
      std::unique(distinguished.begin(), distinguished.end()),
      distinguished.end());
  require(distinguished.front() >= 0 && distinguished.back() <= n,
          "make_certificate: S must be a subset of {0..n}");
  require(coeffs.size() == static_cast<size_t>(n + 1),
          "make_certificate: expected " + std::to_string(n + 1) +
              " coefficients, got " + std::to_string(coeffs.size()));
  return Certificate{std::move(ctx), std::move(distinguished),
                     std::move(coeffs)};
}

Certificate hamming_certificate(int n, int q, int e) {
  check_hamming_pre(n, q, e);
  auto ctx = make_context(n, q);
  const HammingData d = hamming_data(*ctx, e);
  std::vector<Rational> coeffs(d.coeffs.begin(), d.coeffs.end());
  std::vector<int> s(2 * e + 1);
  for (int x = 0; x <= 2 * e; ++x) s[x] = x;
  return Certificate{std::move(ctx), std::move(s), std::move(coeffs)};
}

Rational evaluate_certificate(const Certificate& cert, int x) {
  const int n = cert.ctx->length();
  require(x >= 0 && x <= n, "evaluate_certificate: x outside [0," +
                                std::to_string(n) + "]");
  Rational acc;
  for (int j = 0; j <= n; ++j) {
    acc += cert.coeffs[j] * Rational(cert.ctx->eval(j, x));
  }
  return acc;
}

ConditionReport verify_conditions(const Certificate& cert) {
  const int n = cert.ctx->length();
  ConditionReport report;
  const auto in_s = [&](int x) {
    return std::binary_search(cert.distinguished.begin(),
                              cert.distinguished.end(), x);
  };
  for (int x = 0; x <= n; ++x) {
    const Rational& fx = cert.coeffs[x];
    const bool bad = in_s(x) ? fx.sign() <= 0 : fx.sign() < 0;
    if (bad) {
      report.condition_i_ok = false;
      report.violations.push_back({x, fx, 1});
    }
  }
  for (int x = 0; x <= n; ++x) {
    if (in_s(x)) continue;
    Rational v = evaluate_certificate(cert, x);
    if (v.sign() > 0) {
      report.condition_ii_ok = false;
      report.violations.push_back({x, std::move(v), 2});
    }
  }
  return report;
}

LpBoundResult lp_bound(const Certificate& cert) {
  const ConditionReport report = verify_conditions(cert);
  if (!report.ok()) {
    const ConditionViolation& v = report.violations.front();
    throw CertificateInfeasible(
        "lp_bound: certificate infeasible, condition " +
        std::string(v.condition == 1 ? "i" : "ii") + " violated at x=" +
        std::to_string(v.x) + " (value " + v.value.str() + ")");
  }
  std::optional<Rational> best;
  int best_x = -1;
  for (int x : cert.distinguished) {
    Rational r = evaluate_certificate(cert, x) / cert.coeffs[x];
    if (!best || r > *best) {
      best = std::move(r);
      best_x = x;
    }
  }
  const BigInt qn = power(BigInt(cert.ctx->field_size()),
                          static_cast<unsigned long>(cert.ctx->length()));
  return LpBoundResult{*best / Rational(qn), best_x};
}

ClosedFormsE2 closed_form_e2(int n, int q) {
  require(n >= 5, "closed_form_e2: n must be >= 5");
  require(q >= 2, "closed_form_e2: q must be >= 2");
  const BigInt N(n);
  const BigInt t = BigInt(q) * q - 1;  // q^2 - 1
  const BigInt u = BigInt(q) * q - 2;  // q^2 - 2
  const BigInt p2n = power(BigInt(q), 2 * static_cast<unsigned long>(n));

  ClosedFormsE2 cf;
  const BigInt s0 = 1 + N * t + N * (N - 1) / 2 * t * t;
  cf.coeff[0] = s0 * s0;
  const BigInt s1 = (N - 1) * (N - 2) / 2 * t * t;
  cf.coeff[1] = s1 * s1;  // == (1/4)(n-1)^2(n-2)^2 t^4
  const BigInt s2 = (N - 3) * (N - 2) / 2 * t * t - (N - 2) * t;
  cf.coeff[2] = s2 * s2;
  const BigInt s3 = 1 - 2 * (N - 3) * t + (N - 4) * (N - 3) / 2 * t * t;
  cf.coeff[3] = s3 * s3;
  const BigInt s4 = 3 - 3 * (N - 4) * t + (N - 5) * (N - 4) / 2 * t * t;
  cf.coeff[4] = s4 * s4;

  cf.value[0] = p2n * (1 + N * t + (N - 1) * N / 2 * t * t);
  cf.value[1] = p2n * (BigInt(q) * q + 2 * (N - 1) * t + (N - 1) * u * t);
  cf.value[2] = p2n * (4 + 4 * u + u * u + 2 * (N - 2) * t);
  cf.value[3] = p2n * (6 + 6 * u);
  cf.value[4] = 6 * p2n;
  return cf;
}

std::vector<RatioEntry> ratio_table(const Certificate& cert) {
  std::vector<RatioEntry> table;
  table.reserve(cert.distinguished.size());
  for (int x : cert.distinguished) {
    if (cert.coeffs[x].is_zero()) {
      throw std::domain_error("ratio_table: f_x is zero at x=" +
                              std::to_string(x) + ", ratio undefined");
    }
    table.push_back({x, evaluate_certificate(cert, x) / cert.coeffs[x]});
  }
  return table;
}

bool dominance_check(int n, int q, int e) {
  const auto flags = hamming_dominance_flags(n, q, e);
  return std::all_of(flags.begin(), flags.end(),
                     [](uint8_t f) { return f != 0; });
}

DominanceReport dominance_threshold(int q, int e, int n_max, int workers) {
  require(q >= 2, "dominance_threshold: q must be >= 2");
  require(e >= 1, "dominance_threshold: e must be >= 1");
  const int n_lo = 2 * e + 1;
  require(n_max >= n_lo, "dominance_threshold: need n_max >= 2e+1");

  const int count = n_max - n_lo + 1;
  const int s_size = 2 * e + 1;
  std::vector<std::vector<uint8_t>> flags(count);

  workers = std::clamp(workers, 1, count);
  auto work = [&](int w) {
    for (int i = w; i < count; i += workers) {
      flags[i] = hamming_dominance_flags(n_lo + i, q, e);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  DominanceReport report;
  report.q = q;
  report.e = e;
  report.n_lo = n_lo;
  report.n_hi = n_max;
  report.dominant.resize(count);
  for (int i = 0; i < count; ++i) {
    report.dominant[i] = std::all_of(flags[i].begin(), flags[i].end(),
                                     [](uint8_t f) { return f != 0; })
                             ? 1
                             : 0;
  }

  // First index from which a predicate holds through the end of the scan.
  const auto stable_from = [&](auto&& holds_at) -> std::optional<int> {
    for (int i = count - 1; i >= 0; --i) {
      if (!holds_at(i)) {
        if (i == count - 1) return std::nullopt;
        return n_lo + i + 1;
      }
    }
    return n_lo;
  };

  report.stable_threshold =
      stable_from([&](int i) { return report.dominant[i] != 0; });
  report.per_x.reserve(s_size);
  for (int x = 0; x < s_size; ++x) {
    report.per_x.push_back(
        {x, stable_from([&](int i) { return flags[i][x] != 0; })});
  }
  return report;
}

}  // namespace qbounds
