#pragma once

#include "fractalmark/attacks.hpp"
#include "fractalmark/embedder.hpp"
#include "fractalmark/image.hpp"
#include "fractalmark/watermark.hpp"

#include <Eigen/Core>

#include <span>
#include <string>
#include <vector>

namespace fractalmark {

using BoolGrid = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Result of comparing a recovered watermark with the key-regenerated one.
struct RecoveryReport {
  int order = 0;
  /// match(py, px) is true when all four bits of entry (px, py) agree.
  BoolGrid match;
  double bit_rate = 0.0;
  double patch_rate = 0.0;

  int side() const { return 1 << order; }
};

RecoveryReport compare(const WatermarkMatrix& expected, const SoftRecovery& recovered);
RecoveryReport compare(const WatermarkMatrix& expected, const WatermarkMatrix& recovered);

enum class Label { Real, Fake };

std::string_view to_string(Label label);

inline constexpr double kDefaultThreshold = 0.85;

struct Verdict {
  Label label = Label::Fake;
  double score = 0.0;
  double threshold = kDefaultThreshold;
};

/// Real iff patch_rate >= tau; tau must lie in (0, 1).
Verdict decide(const RecoveryReport& report, double tau = kDefaultThreshold);

/// Tampered-patch flags: the negation of the match mask.
struct LocalizationMask {
  int order = 0;
  BoolGrid tampered;

  Eigen::Index count() const { return tampered.count(); }
};

LocalizationMask localization_map(const RecoveryReport& report);

/// Blends pure red at 50% alpha over every tampered 32x32 patch.
ImageBuffer render_overlay(const ImageBuffer& img, const LocalizationMask& mask);

/// Per-position mismatch counts divided by the largest count (all zero when
/// nothing mismatched).
Eigen::MatrixXd cumulative_heatmap(std::span<const RecoveryReport> reports);
Eigen::MatrixXd cumulative_heatmap(std::span<const LocalizationMask> masks);

/// Renders a normalised heat grid with a black-red-yellow-white ramp, each
/// cell `cell` pixels wide.
ImageBuffer render_heatmap(const Eigen::MatrixXd& heat, int cell = kPatchSize);

/// Mann-Whitney AUC: P(real > fake) with ties counted as one half.
double auc(std::span<const double> real_scores, std::span<const double> fake_scores);

/// Fraction of patches whose state is as expected: cropped patches flagged,
/// all others matched.
double cropping_correctness(const RecoveryReport& report, const PatchList& cropped);

/// Intersection over union of flagged patches against a ground-truth set.
double localization_iou(const LocalizationMask& mask, const PatchList& truth);

/// Mask encoded as a row-major string of '0' (matched) and '1' (tampered).
std::string mask_to_string(const LocalizationMask& mask);
LocalizationMask mask_from_string(std::string_view bits);

}  // namespace fractalmark
