#pragma once

#include "fractalmark/curves.hpp"
#include "fractalmark/keystream.hpp"

#include <Eigen/Core>

#include <array>
#include <cstdint>

namespace fractalmark {

using ByteGrid = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;

/// The confidential tuple from which a watermark is regenerated.
struct WatermarkKey {
  CurveKind kind = CurveKind::Hilbert;
  int order = 3;
  VariationParams variation;
  ChaosParams chaos;

  friend bool operator==(const WatermarkKey&, const WatermarkKey&) = default;
};

void validate(const WatermarkKey& key);

/// 2^n x 2^n grid of 4-bit entries, stored as entries(y, x).
struct WatermarkMatrix {
  int order = 0;
  ByteGrid entries;

  int side() const { return 1 << order; }
  Eigen::Index size() const { return entries.size(); }
  std::uint8_t at(int x, int y) const { return entries(y, x); }
  std::uint8_t& at(int x, int y) { return entries(y, x); }

  friend bool operator==(const WatermarkMatrix& a, const WatermarkMatrix& b) {
    return a.order == b.order && a.entries == b.entries;
  }
};

inline constexpr int kBitsPerEntry = 4;

/// Four binary planes. Plane 0 holds the most significant bit of every entry,
/// plane 3 the least significant.
struct ChannelwiseWatermark {
  int order = 0;
  std::array<ByteGrid, kBitsPerEntry> planes;

  int side() const { return 1 << order; }
};

/// Entry at t.coords[i] is i mod 16, so the matrix records the traversal's
/// order and direction.
WatermarkMatrix raw_matrix(const CurveTraversal& t);

/// Entry at t.coords[i] becomes (raw + ks.digits[i]) mod 16.
WatermarkMatrix encrypt(const WatermarkMatrix& raw, const CurveTraversal& t, const DigitKeystream& ks);

/// Regenerates the encrypted watermark for `key`.
WatermarkMatrix generate(const WatermarkKey& key);

ChannelwiseWatermark to_channelwise(const WatermarkMatrix& m);
WatermarkMatrix from_channelwise(const ChannelwiseWatermark& c);

/// Row-major hex dump, one row of the grid per line. Intended for golden
/// tests only; keys, not matrices, are what gets stored.
std::string to_text(const WatermarkMatrix& m);

}  // namespace fractalmark
