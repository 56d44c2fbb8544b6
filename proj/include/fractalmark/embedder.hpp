#pragma once

#include "fractalmark/image.hpp"
#include "fractalmark/watermark.hpp"

#include <Eigen/Core>

#include <array>
#include <memory>

namespace fractalmark {

/// Position of one coefficient in the 32x32 patch transform: u is the
/// horizontal frequency, v the vertical one.
struct CoefficientSlot {
  int u = 0;
  int v = 0;

  friend bool operator==(const CoefficientSlot&, const CoefficientSlot&) = default;
};

/// Quantisation-index-modulation settings. Slot b carries watermark plane b
/// (plane 0 = most significant bit).
struct EmbedConfig {
  /// Quantisation step in orthonormal-transform units: bit 0 snaps the
  /// coefficient to an even multiple of delta, bit 1 to an odd multiple.
  double delta = 80.0;
  std::array<CoefficientSlot, kBitsPerEntry> slots{{{1, 0}, {0, 1}, {1, 1}, {2, 0}}};
  /// Refinement passes that re-measure the coefficients after rounding and
  /// clamping to 8 bits and push the remaining error back in.
  int refine_passes = 8;
};

void validate(const EmbedConfig& cfg);

/// Per-bit decoder output. confidence holds the probability-like score for
/// bit = 1 and bits the rounded decision (1 iff confidence >= 0.5).
struct SoftRecovery {
  int order = 0;
  std::array<Eigen::MatrixXd, kBitsPerEntry> confidence;
  std::array<ByteGrid, kBitsPerEntry> bits;

  int side() const { return 1 << order; }
  ChannelwiseWatermark hard_bits() const { return {order, bits}; }
  WatermarkMatrix matrix() const { return from_channelwise(hard_bits()); }
};

/// Watermark embed/extract pair. Implementations must be patch local: the
/// bits of entry (px, py) only ever touch, and are only ever read from, the
/// 32x32 pixels of patch (px, py).
class EmbeddingBackend {
 public:
  virtual ~EmbeddingBackend() = default;
  virtual ImageBuffer embed(const ImageBuffer& img, const ChannelwiseWatermark& w) const = 0;
  virtual SoftRecovery extract(const ImageBuffer& img, int order) const = 0;
};

/// Luma-only QIM on fixed coefficients of each patch's 32x32 DCT. The same
/// luma offset is added to R, G and B, which leaves Cb and Cr unchanged.
class QimDctBackend final : public EmbeddingBackend {
 public:
  explicit QimDctBackend(EmbedConfig cfg = {});

  ImageBuffer embed(const ImageBuffer& img, const ChannelwiseWatermark& w) const override;
  SoftRecovery extract(const ImageBuffer& img, int order) const override;

  const EmbedConfig& config() const { return cfg_; }

 private:
  EmbedConfig cfg_;
  std::array<Eigen::MatrixXd, kBitsPerEntry> basis_images_;
};

ImageBuffer embed(const ImageBuffer& img, const ChannelwiseWatermark& w, const EmbedConfig& cfg = {});
SoftRecovery extract(const ImageBuffer& img, int order, const EmbedConfig& cfg = {});

/// Confidence for bit = 1 of a single coefficient: its distance to the
/// nearest even multiple of delta, in units of delta.
double qim_confidence(double coefficient, double delta);

/// Nearest multiple of delta whose index has parity `bit`.
double qim_target(double coefficient, double delta, int bit);

}  // namespace fractalmark
