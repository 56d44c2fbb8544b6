#include "fractalmark/detection.hpp"

#include "fractalmark/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace fractalmark {

RecoveryReport compare(const WatermarkMatrix& expected, const WatermarkMatrix& recovered) {
  if (expected.order != recovered.order || expected.entries.rows() != recovered.entries.rows() ||
      expected.entries.cols() != recovered.entries.cols()) {
    throw ParameterError("expected and recovered watermarks differ in size");
  }
  const int side = expected.side();
  RecoveryReport report{expected.order, BoolGrid(side, side), 0.0, 0.0};
  long correct_bits = 0;
  long correct_patches = 0;
  for (int y = 0; y < side; ++y) {
    for (int x = 0; x < side; ++x) {
      const unsigned diff = static_cast<unsigned>((expected.at(x, y) ^ recovered.at(x, y)) & 0xF);
      const int wrong = std::popcount(diff);
      correct_bits += kBitsPerEntry - wrong;
      report.match(y, x) = wrong == 0;
      correct_patches += wrong == 0 ? 1 : 0;
    }
  }
  const double cells = static_cast<double>(side) * side;
  report.bit_rate = static_cast<double>(correct_bits) / (kBitsPerEntry * cells);
  report.patch_rate = static_cast<double>(correct_patches) / cells;
  return report;
}

RecoveryReport compare(const WatermarkMatrix& expected, const SoftRecovery& recovered) {
  return compare(expected, recovered.matrix());
}

std::string_view to_string(Label label) { return label == Label::Real ? "real" : "fake"; }

Verdict decide(const RecoveryReport& report, double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw ParameterError("threshold must lie in (0, 1)");
  return {report.patch_rate >= tau ? Label::Real : Label::Fake, report.patch_rate, tau};
}

LocalizationMask localization_map(const RecoveryReport& report) {
  return {report.order, report.match.unaryExpr([](bool m) { return !m; })};
}

ImageBuffer render_overlay(const ImageBuffer& img, const LocalizationMask& mask) {
  const int side = 1 << mask.order;
  if (img.width != side * kPatchSize || img.height != side * kPatchSize) {
    throw ParameterError("overlay image does not match the mask grid");
  }
  ImageBuffer out = img;
  for (int py = 0; py < side; ++py)
    for (int px = 0; px < side; ++px) {
      if (!mask.tampered(py, px)) continue;
      for (int y = py * kPatchSize; y < (py + 1) * kPatchSize; ++y)
        for (int x = px * kPatchSize; x < (px + 1) * kPatchSize; ++x) {
          out.at(x, y, 0) = to_byte(0.5 * img.at(x, y, 0) + 0.5 * 255.0);
          out.at(x, y, 1) = to_byte(0.5 * img.at(x, y, 1));
          out.at(x, y, 2) = to_byte(0.5 * img.at(x, y, 2));
        }
    }
  return out;
}

Eigen::MatrixXd cumulative_heatmap(std::span<const LocalizationMask> masks) {
  if (masks.empty()) throw ParameterError("heatmap needs at least one report");
  const int order = masks.front().order;
  const int side = 1 << order;
  Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(side, side);
  for (const LocalizationMask& m : masks) {
    if (m.order != order || m.tampered.rows() != side || m.tampered.cols() != side) {
      throw ParameterError("heatmap reports must share one grid size");
    }
    counts += m.tampered.cast<double>();
  }
  const double peak = counts.maxCoeff();
  return peak > 0.0 ? (counts / peak).eval() : counts;
}

Eigen::MatrixXd cumulative_heatmap(std::span<const RecoveryReport> reports) {
  std::vector<LocalizationMask> masks;
  masks.reserve(reports.size());
  for (const RecoveryReport& r : reports) masks.push_back(localization_map(r));
  return cumulative_heatmap(std::span<const LocalizationMask>(masks));
}

ImageBuffer render_heatmap(const Eigen::MatrixXd& heat, int cell) {
  if (cell < 1) throw ParameterError("heatmap cell size must be positive");
  const int rows = static_cast<int>(heat.rows());
  const int cols = static_cast<int>(heat.cols());
  ImageBuffer out = ImageBuffer::filled(cols * cell, rows * cell, 0, 0, 0);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const double v = std::clamp(heat(r, c), 0.0, 1.0);
      const std::uint8_t red = to_byte(255.0 * std::min(1.0, 3.0 * v));
      const std::uint8_t green = to_byte(255.0 * std::clamp(3.0 * v - 1.0, 0.0, 1.0));
      const std::uint8_t blue = to_byte(255.0 * std::clamp(3.0 * v - 2.0, 0.0, 1.0));
      for (int y = r * cell; y < (r + 1) * cell; ++y)
        for (int x = c * cell; x < (c + 1) * cell; ++x) {
          out.at(x, y, 0) = red;
          out.at(x, y, 1) = green;
          out.at(x, y, 2) = blue;
        }
    }
  return out;
}

double auc(std::span<const double> real_scores, std::span<const double> fake_scores) {
  if (real_scores.empty() || fake_scores.empty()) throw ParameterError("AUC needs scores on both sides");
  // Rank-sum over the sorted fakes: O((n + m) log m).
  std::vector<double> fakes(fake_scores.begin(), fake_scores.end());
  std::sort(fakes.begin(), fakes.end());
  double wins = 0.0;
  for (double r : real_scores) {
    const auto lo = std::lower_bound(fakes.begin(), fakes.end(), r);
    const auto hi = std::upper_bound(lo, fakes.end(), r);
    wins += static_cast<double>(lo - fakes.begin()) + 0.5 * static_cast<double>(hi - lo);
  }
  return wins / (static_cast<double>(real_scores.size()) * static_cast<double>(fakes.size()));
}

double cropping_correctness(const RecoveryReport& report, const PatchList& cropped) {
  const int side = report.side();
  BoolGrid expected_loss = BoolGrid::Constant(side, side, false);
  for (const Eigen::Vector2i& p : cropped) {
    if (p.x() < 0 || p.y() < 0 || p.x() >= side || p.y() >= side) throw ParameterError("cropped patch outside the grid");
    expected_loss(p.y(), p.x()) = true;
  }
  long correct = 0;
  for (int y = 0; y < side; ++y)
    for (int x = 0; x < side; ++x) correct += (expected_loss(y, x) != report.match(y, x)) ? 1 : 0;
  return static_cast<double>(correct) / (static_cast<double>(side) * side);
}

double localization_iou(const LocalizationMask& mask, const PatchList& truth) {
  const int side = 1 << mask.order;
  BoolGrid gt = BoolGrid::Constant(side, side, false);
  for (const Eigen::Vector2i& p : truth) gt(p.y(), p.x()) = true;
  const auto inter = (gt.array() && mask.tampered.array()).count();
  const auto uni = (gt.array() || mask.tampered.array()).count();
  return uni == 0 ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

std::string mask_to_string(const LocalizationMask& mask) {
  std::string out;
  out.reserve(static_cast<std::size_t>(mask.tampered.size()));
  for (Eigen::Index y = 0; y < mask.tampered.rows(); ++y)
    for (Eigen::Index x = 0; x < mask.tampered.cols(); ++x) out.push_back(mask.tampered(y, x) ? '1' : '0');
  return out;
}

LocalizationMask mask_from_string(std::string_view bits) {
  for (int n = kMinOrder; n <= kMaxOrder; ++n) {
    const int side = 1 << n;
    if (bits.size() != static_cast<std::size_t>(side) * side) continue;
    LocalizationMask mask{n, BoolGrid(side, side)};
    for (int y = 0; y < side; ++y)
      for (int x = 0; x < side; ++x) {
        const char c = bits[static_cast<std::size_t>(y) * side + x];
        if (c != '0' && c != '1') throw ParameterError("mask string must contain only 0 and 1");
        mask.tampered(y, x) = c == '1';
      }
    return mask;
  }
  throw ParameterError("mask string length is not 4^n for n in [1, 8]");
}

}  // namespace fractalmark
