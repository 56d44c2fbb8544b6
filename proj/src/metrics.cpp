#include "fractalmark/metrics.hpp"

#include <cmath>

namespace fractalmark {

double psnr(const ImageBuffer& a, const ImageBuffer& b) {
  check_same_shape(a, b);
  double sq = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    const double d = static_cast<double>(a.data[i]) - static_cast<double>(b.data[i]);
    sq += d * d;
  }
  if (sq == 0.0) return std::numeric_limits<double>::infinity();
  const double mse = sq / static_cast<double>(a.data.size());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double ssim(const ImageBuffer& a, const ImageBuffer& b) {
  check_same_shape(a, b);
  return ssim_plane(luma(a), luma(b));
}

}  // namespace fractalmark
