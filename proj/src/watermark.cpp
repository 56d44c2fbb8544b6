#include "fractalmark/watermark.hpp"

#include "fractalmark/errors.hpp"

#include <sstream>

namespace fractalmark {

void validate(const WatermarkKey& key) {
  if (key.order < kMinOrder || key.order > kMaxOrder) {
    throw ParameterError("curve order must lie in [1, 8]");
  }
  validate_variation(key.kind, key.variation);
  validate(key.chaos);
}

WatermarkMatrix raw_matrix(const CurveTraversal& t) {
  if (!is_bijection(t)) throw ParameterError("traversal is not a bijection over its grid");
  WatermarkMatrix m{t.order, ByteGrid::Zero(t.side(), t.side())};
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    m.at(t.coords(0, i), t.coords(1, i)) = static_cast<std::uint8_t>(i % 16);
  }
  return m;
}

WatermarkMatrix encrypt(const WatermarkMatrix& raw, const CurveTraversal& t, const DigitKeystream& ks) {
  if (raw.order != t.order || raw.entries.rows() != t.side() || raw.entries.cols() != t.side()) {
    throw ParameterError("watermark and traversal disagree on grid size");
  }
  if (ks.size() != static_cast<std::size_t>(t.size())) {
    throw ParameterError("keystream length must equal the number of grid cells");
  }
  WatermarkMatrix out = raw;
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    const int x = t.coords(0, i);
    const int y = t.coords(1, i);
    out.at(x, y) = static_cast<std::uint8_t>((raw.at(x, y) + ks.digits[static_cast<std::size_t>(i)]) % 16);
  }
  return out;
}

WatermarkMatrix generate(const WatermarkKey& key) {
  validate(key);
  const CurveTraversal curve = build_variant(key.kind, key.order, key.variation);
  const DigitKeystream ks = keystream(key.chaos, static_cast<std::size_t>(curve.size()));
  return encrypt(raw_matrix(curve), curve, ks);
}

ChannelwiseWatermark to_channelwise(const WatermarkMatrix& m) {
  ChannelwiseWatermark c{m.order, {}};
  for (int plane = 0; plane < kBitsPerEntry; ++plane) {
    const int shift = kBitsPerEntry - 1 - plane;
    c.planes[static_cast<std::size_t>(plane)] =
        m.entries.unaryExpr([shift](std::uint8_t v) { return static_cast<std::uint8_t>((v >> shift) & 1); });
  }
  return c;
}

WatermarkMatrix from_channelwise(const ChannelwiseWatermark& c) {
  const int side = c.side();
  WatermarkMatrix m{c.order, ByteGrid::Zero(side, side)};
  for (int plane = 0; plane < kBitsPerEntry; ++plane) {
    const ByteGrid& bits = c.planes[static_cast<std::size_t>(plane)];
    if (bits.rows() != side || bits.cols() != side) throw ParameterError("bit plane has the wrong shape");
    const int shift = kBitsPerEntry - 1 - plane;
    for (int y = 0; y < side; ++y)
      for (int x = 0; x < side; ++x) {
        if (bits(y, x) > 1) throw ParameterError("bit planes must be binary");
        m.at(x, y) = static_cast<std::uint8_t>(m.at(x, y) | (bits(y, x) << shift));
      }
  }
  return m;
}

std::string to_text(const WatermarkMatrix& m) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::ostringstream out;
  for (int y = 0; y < m.side(); ++y) {
    for (int x = 0; x < m.side(); ++x) out << kHex[m.at(x, y) & 0xF];
    out << '\n';
  }
  return out.str();
}

}  // namespace fractalmark
