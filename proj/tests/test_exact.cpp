#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qbounds/exact.hpp"

using namespace qbounds;

TEST_CASE("binomial basics and vanishing convention") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(-2, 0) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("binomial symmetry") {
  for (long a = 0; a <= 64; ++a) {
    for (long b = 0; b <= a; ++b) {
      CHECK(binomial(a, b) == binomial(a, a - b));
    }
  }
}

TEST_CASE("binomial Pascal recurrence, including out-of-range b") {
  for (long a = 1; a <= 40; ++a) {
    for (long b = -2; b <= a + 2; ++b) {
      CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
    }
  }
}

TEST_CASE("power") {
  CHECK(power(BigInt(2), 10) == 1024);
  CHECK(power(BigInt(3), 0) == 1);
  CHECK(power(BigInt(7), 8) == 5764801);
  CHECK(power(BigInt(0), 0) == 1);
  CHECK(power(BigInt(0), 5) == 0);
  CHECK(power(BigInt(-3), 3) == -27);
}

TEST_CASE("power is exact at the working scale (q = 9, n = 512)") {
  const BigInt big = power(BigInt(9), 1024);  // q^{2n}
  CHECK(big == power(BigInt(9), 512) * power(BigInt(9), 512));
  CHECK(big % 9 == 0);
  CHECK(big / power(BigInt(9), 1023) == 9);
}

TEST_CASE("isqrt_floor spot values") {
  auto r = isqrt_floor(BigInt(2041));
  CHECK(r.root == 45);
  CHECK_FALSE(r.perfect);
  r = isqrt_floor(BigInt(0));
  CHECK(r.root == 0);
  CHECK(r.perfect);
  r = isqrt_floor(BigInt(52516));
  CHECK(r.root == 229);
  CHECK_FALSE(r.perfect);
  r = isqrt_floor(BigInt(1));
  CHECK(r.root == 1);
  CHECK(r.perfect);
  CHECK_THROWS_AS(isqrt_floor(BigInt(-1)), std::domain_error);
}

TEST_CASE("isqrt_floor bracketing property on random values") {
  std::mt19937_64 rng(0x5eed);
  for (int i = 0; i < 200; ++i) {
    BigInt v = 1;
    const int bits = 1 + static_cast<int>(rng() % 512);
    for (int b = 0; b < bits; ++b) v = v * 2 + static_cast<long>(rng() % 2);
    const auto r = isqrt_floor(v);
    CHECK(r.root * r.root <= v);
    CHECK((r.root + 1) * (r.root + 1) > v);
    CHECK(r.perfect == (r.root * r.root == v));
    // a known perfect square is flagged
    const auto sq = isqrt_floor(v * v);
    CHECK(sq.root == v);
    CHECK(sq.perfect);
  }
}

TEST_CASE("rational construction normalizes") {
  const Rational r(BigInt(4), BigInt(6));
  CHECK(r.num() == 2);
  CHECK(r.den() == 3);
  const Rational s(BigInt(-3), BigInt(-6));
  CHECK(s.num() == 1);
  CHECK(s.den() == 2);
  const Rational t(BigInt(3), BigInt(-6));
  CHECK(t.num() == -1);
  CHECK(t.den() == 2);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("rational stays in lowest terms through random arithmetic") {
  std::mt19937_64 rng(42);
  const auto rand_rational = [&] {
    const long num = static_cast<long>(rng() % 2001) - 1000;
    const long den = 1 + static_cast<long>(rng() % 999);
    return Rational(BigInt(num), BigInt(den));
  };
  Rational acc = rand_rational();
  for (int i = 0; i < 500; ++i) {
    const Rational other = rand_rational();
    switch (rng() % 4) {
      case 0: acc += other; break;
      case 1: acc -= other; break;
      case 2: acc *= other; break;
      default:
        if (!other.is_zero()) acc /= other;
        break;
    }
    CHECK(gcd(acc.num(), acc.den()) == 1);
    CHECK(acc.den() > 0);
  }
}

TEST_CASE("rational comparisons are exact") {
  CHECK(Rational(BigInt(1), BigInt(3)) < Rational(BigInt(2), BigInt(5)));
  CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(-7) < Rational(BigInt(-13), BigInt(2)));
  const Rational tiny(BigInt(1), power(BigInt(10), 50));
  CHECK(Rational(0) < tiny);
  CHECK(tiny + tiny == Rational(BigInt(2), power(BigInt(10), 50)));
}

TEST_CASE("rational division by zero") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational string forms") {
  CHECK(Rational(BigInt(256), BigInt(109)).str() == "256/109");
  CHECK(Rational(BigInt(4), BigInt(2)).str() == "2");
  CHECK(Rational(BigInt(-3), BigInt(9)).str() == "-1/3");
  CHECK(Rational(0).str() == "0");
}
