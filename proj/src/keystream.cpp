#include "fractalmark/keystream.hpp"

#include "fractalmark/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace fractalmark {

namespace {

// Exact binary64 powers of ten; 10^22 is the largest exactly representable.
constexpr std::array<double, 21> kPow10 = {
    1e0,  1e1,  1e2,  1e3,  1e4,  1e5,  1e6,  1e7,  1e8,  1e9,  1e10,
    1e11, 1e12, 1e13, 1e14, 1e15, 1e16, 1e17, 1e18, 1e19, 1e20};

}  // namespace

ChaosParams ChaosParams::make(double x0, double a, int k, int d) {
  ChaosParams p{x0, a, k, d};
  validate(p);
  return p;
}

void validate(const ChaosParams& p) {
  if (!(p.x0 >= kMinX0 && p.x0 <= kMaxX0)) throw ParameterError("x0 must lie in [0.1, 0.9]");
  if (!(p.a >= kMinA && p.a < kMaxA)) throw ParameterError("a must lie in [3.7, 4.0)");
  if (p.k < kMinWarmup || p.k > kMaxWarmup) throw ParameterError("k must lie in [100, 1000]");
  if (p.d < kMinDigit || p.d > kMaxDigit) throw ParameterError("d must lie in [2, 20]");
  if (p.x0 == 1.0 - 1.0 / p.a) {
    throw ParameterError("x0 sits on the logistic map fixed point 1 - 1/a; choose another x0");
  }
}

double logistic_step(double x, double a) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("logistic map state must lie in (0, 1)");
  const double ax = a * x;
  const double complement = 1.0 - x;
  return ax * complement;
}

int digit_extract(double x, int d) {
  if (!(x > 0.0 && x < 1.0)) throw ParameterError("digit extraction needs x in (0, 1)");
  if (d < kMinDigit || d > kMaxDigit) throw ParameterError("digit index must lie in [2, 20]");
  const double scaled = std::floor(x * kPow10[static_cast<std::size_t>(d)]);
  return static_cast<int>(std::fmod(scaled, 10.0));
}

namespace {

double warmed_up(const ChaosParams& p) {
  double x = p.x0;
  for (int i = 0; i < p.k; ++i) {
    x = logistic_step(x, p.a);
    if (x <= 0.0 || x >= 1.0) {
      throw DegeneracyError("logistic iteration collapsed onto 0 or 1; choose different chaos parameters");
    }
  }
  return x;
}

double lyapunov_from(double x, double a) {
  double sum = 0.0;
  for (int i = 0; i < kLyapunovSteps; ++i) {
    sum += std::log(std::abs(a * (1.0 - 2.0 * x)));
    x = logistic_step(x, a);
    if (x <= 0.0 || x >= 1.0) return -std::numeric_limits<double>::infinity();
  }
  return sum / kLyapunovSteps;
}

}  // namespace

double lyapunov_exponent(const ChaosParams& p) {
  validate(p);
  return lyapunov_from(warmed_up(p), p.a);
}

DigitKeystream keystream(const ChaosParams& p, std::size_t count) {
  validate(p);
  if (count == 0) throw ParameterError("keystream length must be positive");

  const auto degenerate = [] {
    return DegeneracyError(
        "logistic iteration collapsed onto 0 or 1; choose different chaos parameters");
  };

  double x = warmed_up(p);
  if (!(lyapunov_from(x, p.a) >= kMinLyapunov)) {
    throw DegeneracyError("a = " + std::to_string(p.a) +
                          " lies in a periodic window of the logistic map; the stream would repeat, choose another a");
  }

  DigitKeystream ks;
  ks.digits.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (i > 0) {
      x = logistic_step(x, p.a);
      if (x <= 0.0 || x >= 1.0) throw degenerate();
    }
    ks.digits.push_back(static_cast<std::uint8_t>(digit_extract(x, p.d)));
  }

  if (count > 1 && std::all_of(ks.digits.begin(), ks.digits.end(),
                               [&](std::uint8_t v) { return v == ks.digits.front(); })) {
    throw DegeneracyError("digit stream is constant; choose different chaos parameters");
  }
  return ks;
}

}  // namespace fractalmark
