#pragma once

#include "fractalmark/image.hpp"

#include <Eigen/Core>

#include <limits>

namespace fractalmark {

/// 10 log10(255^2 / MSE) over all three channels. Identical images give
/// +infinity; callers print that as "identical".
double psnr(const ImageBuffer& a, const ImageBuffer& b);

inline constexpr int kSsimWindow = 8;

/// Mean SSIM over every 8x8 window (stride 1) of two planes on a 0..255
/// scale, with K1 = 0.01, K2 = 0.03 and population (1/N) moments.
template <typename DerivedA, typename DerivedB>
double ssim_plane(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  const Eigen::Index w = kSsimWindow;
  if (rows < w || cols < w) return (a.template cast<double>() - b.template cast<double>()).isZero() ? 1.0 : 0.0;

  // Summed-area tables with a zero border row and column.
  const auto integral = [&](const Eigen::MatrixXd& p) {
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(rows + 1, cols + 1);
    for (Eigen::Index y = 0; y < rows; ++y)
      for (Eigen::Index x = 0; x < cols; ++x) s(y + 1, x + 1) = p(y, x) + s(y, x + 1) + s(y + 1, x) - s(y, x);
    return s;
  };
  const Eigen::MatrixXd x = a.template cast<double>();
  const Eigen::MatrixXd y = b.template cast<double>();
  const Eigen::MatrixXd sx = integral(x);
  const Eigen::MatrixXd sy = integral(y);
  const Eigen::MatrixXd sxx = integral(x.cwiseProduct(x));
  const Eigen::MatrixXd syy = integral(y.cwiseProduct(y));
  const Eigen::MatrixXd sxy = integral(x.cwiseProduct(y));
  const auto box = [w](const Eigen::MatrixXd& s, Eigen::Index r, Eigen::Index c) {
    return s(r + w, c + w) - s(r, c + w) - s(r + w, c) + s(r, c);
  };

  constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
  constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);
  const double n = static_cast<double>(w * w);
  double total = 0.0;
  for (Eigen::Index r = 0; r + w <= rows; ++r) {
    for (Eigen::Index c = 0; c + w <= cols; ++c) {
      const double mx = box(sx, r, c) / n;
      const double my = box(sy, r, c) / n;
      const double vx = box(sxx, r, c) / n - mx * mx;
      const double vy = box(syy, r, c) / n - my * my;
      const double cxy = box(sxy, r, c) / n - mx * my;
      total += ((2 * mx * my + kC1) * (2 * cxy + kC2)) / ((mx * mx + my * my + kC1) * (vx + vy + kC2));
    }
  }
  return total / static_cast<double>((rows - w + 1) * (cols - w + 1));
}

/// SSIM of the luma planes.
double ssim(const ImageBuffer& a, const ImageBuffer& b);

}  // namespace fractalmark
