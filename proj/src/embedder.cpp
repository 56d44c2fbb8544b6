#include "fractalmark/embedder.hpp"

#include "fractalmark/dct.hpp"
#include "fractalmark/errors.hpp"

#include <cmath>
#include <string>

namespace fractalmark {

namespace {

using PatchMatrix = Eigen::Matrix<double, kPatchSize, kPatchSize>;

PatchMatrix patch_luma(const ImageBuffer& img, int px, int py) {
  const int x0 = px * kPatchSize;
  const int y0 = py * kPatchSize;
  return 0.299 * channel(img, 0).block<kPatchSize, kPatchSize>(y0, x0).cast<double>() +
         0.587 * channel(img, 1).block<kPatchSize, kPatchSize>(y0, x0).cast<double>() +
         0.114 * channel(img, 2).block<kPatchSize, kPatchSize>(y0, x0).cast<double>();
}

void check_geometry(const ImageBuffer& img, int order) {
  if (img.data.size() != static_cast<std::size_t>(img.width) * img.height * ImageBuffer::kChannels) {
    throw ParameterError("image buffer size does not match its dimensions");
  }
  if (order_for_image(img) != order) {
    throw ParameterError("image side " + std::to_string(img.width) + " does not match watermark order " +
                         std::to_string(order) + " (expected " + std::to_string(kPatchSize << order) + ")");
  }
}

}  // namespace

void validate(const EmbedConfig& cfg) {
  if (!(cfg.delta > 0.0) || !std::isfinite(cfg.delta)) throw ParameterError("delta must be positive");
  if (cfg.refine_passes < 1) throw ParameterError("refine_passes must be at least 1");
  for (std::size_t i = 0; i < cfg.slots.size(); ++i) {
    const CoefficientSlot& s = cfg.slots[i];
    if (s.u < 0 || s.v < 0 || s.u >= kPatchSize || s.v >= kPatchSize) {
      throw ParameterError("coefficient slot outside the 32x32 transform");
    }
    if (s.u == 0 && s.v == 0) throw ParameterError("the DC coefficient cannot carry watermark bits");
    for (std::size_t j = 0; j < i; ++j)
      if (cfg.slots[j] == s) throw ParameterError("coefficient slots must be distinct");
  }
}

double qim_confidence(double coefficient, double delta) {
  const double q = coefficient / delta;
  const double even = 2.0 * std::floor(q / 2.0 + 0.5);
  const double distance = std::abs(q - even);
  return distance > 1.0 ? 1.0 : distance;
}

double qim_target(double coefficient, double delta, int bit) {
  const double q = coefficient / delta;
  const double index = bit == 0 ? 2.0 * std::floor(q / 2.0 + 0.5) : 2.0 * std::floor((q - 1.0) / 2.0 + 0.5) + 1.0;
  return index * delta;
}

QimDctBackend::QimDctBackend(EmbedConfig cfg) : cfg_(cfg) {
  validate(cfg_);
  const Eigen::MatrixXd basis = dct_matrix<double>(kPatchSize);
  for (std::size_t s = 0; s < cfg_.slots.size(); ++s) {
    basis_images_[s] = dct_basis_image(basis, cfg_.slots[s].u, cfg_.slots[s].v);
  }
}

ImageBuffer QimDctBackend::embed(const ImageBuffer& img, const ChannelwiseWatermark& w) const {
  check_geometry(img, w.order);
  for (const ByteGrid& plane : w.planes)
    if (plane.rows() != w.side() || plane.cols() != w.side()) throw ParameterError("bit plane has the wrong shape");

  ImageBuffer out = img;
  std::array<double, kBitsPerEntry> targets{};
  for (int py = 0; py < w.side(); ++py) {
    for (int px = 0; px < w.side(); ++px) {
      const PatchMatrix start = patch_luma(img, px, py);
      for (std::size_t s = 0; s < targets.size(); ++s) {
        targets[s] = qim_target(dct_coefficient(start, basis_images_[s]), cfg_.delta, w.planes[s](py, px));
      }

      // The accumulated luma offset is kept in floating point; every pass
      // re-rounds from the original pixels so errors do not compound.
      PatchMatrix offset = PatchMatrix::Zero();
      for (int pass = 0; pass < cfg_.refine_passes; ++pass) {
        const PatchMatrix current = pass == 0 ? start : patch_luma(out, px, py);
        double worst = 0.0;
        for (std::size_t s = 0; s < targets.size(); ++s) {
          const double error = targets[s] - dct_coefficient(current, basis_images_[s]);
          worst = std::max(worst, std::abs(error));
          offset += error * basis_images_[s];
        }
        if (worst <= 0.01 * cfg_.delta) break;
        for (int y = 0; y < kPatchSize; ++y) {
          for (int x = 0; x < kPatchSize; ++x) {
            const int ix = px * kPatchSize + x;
            const int iy = py * kPatchSize + y;
            for (int c = 0; c < ImageBuffer::kChannels; ++c) {
              out.at(ix, iy, c) = to_byte(static_cast<double>(img.at(ix, iy, c)) + offset(y, x));
            }
          }
        }
      }
    }
  }
  return out;
}

SoftRecovery QimDctBackend::extract(const ImageBuffer& img, int order) const {
  check_geometry(img, order);
  SoftRecovery rec;
  rec.order = order;
  const int side = 1 << order;
  for (std::size_t s = 0; s < kBitsPerEntry; ++s) {
    rec.confidence[s].resize(side, side);
    rec.bits[s].resize(side, side);
  }
  for (int py = 0; py < side; ++py) {
    for (int px = 0; px < side; ++px) {
      const PatchMatrix patch = patch_luma(img, px, py);
      for (std::size_t s = 0; s < kBitsPerEntry; ++s) {
        const double conf = qim_confidence(dct_coefficient(patch, basis_images_[s]), cfg_.delta);
        rec.confidence[s](py, px) = conf;
        rec.bits[s](py, px) = conf >= 0.5 ? 1 : 0;
      }
    }
  }
  return rec;
}

ImageBuffer embed(const ImageBuffer& img, const ChannelwiseWatermark& w, const EmbedConfig& cfg) {
  return QimDctBackend(cfg).embed(img, w);
}

SoftRecovery extract(const ImageBuffer& img, int order, const EmbedConfig& cfg) {
  return QimDctBackend(cfg).extract(img, order);
}

}  // namespace fractalmark
