#pragma once

#include <cstdint>
#include <vector>

namespace fractalmark {

/// Logistic-map parameters. All bounds are checked by `make`:
///   x0 in [0.1, 0.9], a in [3.7, 4.0), k in [100, 1000], d in [2, 20],
/// and x0 must not sit on the fixed point 1 - 1/a.
struct ChaosParams {
  double x0 = 0.0;
  double a = 0.0;
  int k = 0;
  int d = 0;

  static ChaosParams make(double x0, double a, int k, int d);

  friend bool operator==(const ChaosParams&, const ChaosParams&) = default;
};

inline constexpr double kMinX0 = 0.1;
inline constexpr double kMaxX0 = 0.9;
inline constexpr double kMinA = 3.7;
inline constexpr double kMaxA = 4.0;  // exclusive
inline constexpr int kMinWarmup = 100;
inline constexpr int kMaxWarmup = 1000;
inline constexpr int kMinDigit = 2;
inline constexpr int kMaxDigit = 20;

void validate(const ChaosParams& p);

/// One step a*x*(1-x), evaluated as (a*x)*(1-x) in binary64. The build
/// disables floating-point contraction so no FMA is formed here.
double logistic_step(double x, double a);

/// floor(x * 10^d) mod 10: the d-th decimal digit of x.
int digit_extract(double x, int d);

struct DigitKeystream {
  std::vector<std::uint8_t> digits;

  std::size_t size() const { return digits.size(); }
};

inline constexpr int kLyapunovSteps = 2000;
inline constexpr double kMinLyapunov = 0.05;

/// Finite-time Lyapunov exponent: the mean of log|a (1 - 2 x_i)| over the
/// kLyapunovSteps iterates that follow the warm-up. Parameters inside a
/// periodic window of the map give values <= 0.
double lyapunov_exponent(const ChaosParams& p);

/// Digits of x_k, x_{k+1}, ..., x_{k+count-1}, where x_i is the i-th iterate
/// from x0. Throws DegeneracyError if an iterate reaches 0 or 1 exactly, if
/// count > 1 and every digit is the same, or if the orbit is not chaotic
/// (lyapunov_exponent below kMinLyapunov): such orbits settle on a cycle and
/// the stream repeats.
DigitKeystream keystream(const ChaosParams& p, std::size_t count);

}  // namespace fractalmark
