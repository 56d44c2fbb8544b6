#include "fractalmark/errors.hpp"
#include "fractalmark/keystream.hpp"

#include <doctest.h>

#include <array>
#include <random>

using namespace fractalmark;

TEST_CASE("logistic step examples") {
  CHECK(logistic_step(0.1, 3.7) == doctest::Approx(0.333).epsilon(1e-12));
  CHECK(logistic_step(0.5, 3.8) == doctest::Approx(0.95).epsilon(1e-12));
  CHECK_THROWS_AS(logistic_step(0.0, 3.9), DomainError);
  CHECK_THROWS_AS(logistic_step(1.0, 3.9), DomainError);
  CHECK_THROWS_AS(logistic_step(-0.2, 3.9), DomainError);
}

TEST_CASE("iterates stay inside (0, 1)") {
  double x = 0.2;
  for (int i = 0; i < 1000; ++i) {
    x = logistic_step(x, 3.9);
    REQUIRE(x > 0.0);
    REQUIRE(x < 1.0);
  }
}

TEST_CASE("digit extraction") {
  CHECK(digit_extract(0.333, 2) == 3);
  CHECK(digit_extract(0.95, 2) == 5);
  CHECK(digit_extract(0.123456, 5) == 5);
  CHECK_THROWS_AS(digit_extract(0.5, 1), ParameterError);
  CHECK_THROWS_AS(digit_extract(0.5, 21), ParameterError);
  CHECK_THROWS_AS(digit_extract(1.0, 3), ParameterError);
}

TEST_CASE("keystream matches the scripted oracle") {
  const DigitKeystream a = keystream(ChaosParams::make(0.5, 3.9, 100, 3), 4);
  CHECK(a.digits == std::vector<std::uint8_t>{4, 8, 7, 6});
  const DigitKeystream b = keystream(ChaosParams::make(0.1, 3.7, 100, 2), 16);
  CHECK(b.digits == std::vector<std::uint8_t>{2, 3, 2, 3, 2, 4, 0, 7, 5, 4, 9, 2, 5, 0, 6, 6});
}

TEST_CASE("keystream range and determinism") {
  const ChaosParams p = ChaosParams::make(0.1, 3.7, 100, 2);
  const DigitKeystream a = keystream(p, 64);
  CHECK(a.size() == 64);
  for (std::uint8_t v : a.digits) CHECK(v <= 9);
  CHECK(keystream(p, 1024).digits == keystream(p, 1024).digits);
}

TEST_CASE("sensitivity to x0") {
  const DigitKeystream a = keystream(ChaosParams::make(0.4, 3.95, 300, 4), 1024);
  const DigitKeystream b = keystream(ChaosParams::make(0.4 + 1e-9, 3.95, 300, 4), 1024);
  int changed = 0;
  for (std::size_t i = 0; i < a.size(); ++i) changed += a.digits[i] != b.digits[i];
  CHECK(changed >= 410);
}

TEST_CASE("rough uniformity") {
  const DigitKeystream s = keystream(ChaosParams::make(0.37, 3.99, 500, 5), 4096);
  std::array<int, 10> hist{};
  for (std::uint8_t v : s.digits) ++hist[v];
  for (int c : hist) CHECK(std::abs(c / 4096.0 - 0.1) <= 0.08);
}

TEST_CASE("boundedness over long runs") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ux(kMinX0, kMaxX0), ua(kMinA, kMaxA);
  for (int trial = 0; trial < 10; ++trial) {
    double x = ux(rng);
    const double a = ua(rng);
    for (int i = 0; i < 100000; ++i) {
      x = logistic_step(x, a);
      REQUIRE(x > 0.0);
      REQUIRE(x < 1.0);
    }
  }
}

TEST_CASE("periodic windows are rejected") {
  // a = 3.835 sits in the period-3 window: the orbit locks onto a cycle.
  const ChaosParams periodic = ChaosParams::make(0.4, 3.835, 200, 4);
  CHECK(lyapunov_exponent(periodic) < 0.0);
  CHECK_THROWS_AS(keystream(periodic, 64), DegeneracyError);
  CHECK(lyapunov_exponent(ChaosParams::make(0.4, 3.9, 200, 4)) > 0.3);
  CHECK(lyapunov_exponent(ChaosParams::make(0.4, 3.99, 200, 4)) > 0.5);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ChaosParams::make(0.05, 3.9, 100, 4), ParameterError);
  CHECK_THROWS_AS(ChaosParams::make(0.5, 4.0, 100, 4), ParameterError);
  CHECK_THROWS_AS(ChaosParams::make(0.5, 3.69, 100, 4), ParameterError);
  CHECK_THROWS_AS(ChaosParams::make(0.5, 3.9, 99, 4), ParameterError);
  CHECK_THROWS_AS(ChaosParams::make(0.5, 3.9, 1001, 4), ParameterError);
  CHECK_THROWS_AS(ChaosParams::make(0.5, 3.9, 100, 21), ParameterError);
  CHECK_NOTHROW(ChaosParams::make(0.9, 3.7, 1000, 20));
  // x0 = 1 - 1/a is the non-trivial fixed point: the stream would be constant.
  CHECK_THROWS_AS(ChaosParams::make(1.0 - 1.0 / 3.75, 3.75, 100, 4), ParameterError);
  CHECK_THROWS_AS(keystream(ChaosParams{1.0 - 1.0 / 3.8, 3.8, 100, 4}, 8), ParameterError);
  CHECK_THROWS_AS(keystream(ChaosParams::make(0.5, 3.9, 100, 3), 0), ParameterError);
}
