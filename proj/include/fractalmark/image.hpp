#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace fractalmark {

/// Side length of the square patch that carries one watermark entry.
inline constexpr int kPatchSize = 32;

/// 8-bit RGB image with interleaved, row-major pixel data.
struct ImageBuffer {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;

  static constexpr int kChannels = 3;

  static ImageBuffer filled(int width, int height, std::uint8_t r, std::uint8_t g, std::uint8_t b);

  bool empty() const { return data.empty(); }
  std::size_t index(int x, int y, int c) const {
    return (static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)) * kChannels +
           static_cast<std::size_t>(c);
  }
  std::uint8_t at(int x, int y, int c) const { return data[index(x, y, c)]; }
  std::uint8_t& at(int x, int y, int c) { return data[index(x, y, c)]; }

  friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;
};

using ByteMatrixRM = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ChannelView = Eigen::Map<ByteMatrixRM, Eigen::Unaligned, Eigen::Stride<Eigen::Dynamic, ImageBuffer::kChannels>>;
using ConstChannelView =
    Eigen::Map<const ByteMatrixRM, Eigen::Unaligned, Eigen::Stride<Eigen::Dynamic, ImageBuffer::kChannels>>;

/// Strided view of one colour channel as a height x width matrix.
inline ChannelView channel(ImageBuffer& img, int c) {
  return {img.data.data() + c, img.height, img.width,
          Eigen::Stride<Eigen::Dynamic, ImageBuffer::kChannels>(static_cast<Eigen::Index>(img.width) * ImageBuffer::kChannels,
                                                                ImageBuffer::kChannels)};
}

inline ConstChannelView channel(const ImageBuffer& img, int c) {
  return {img.data.data() + c, img.height, img.width,
          Eigen::Stride<Eigen::Dynamic, ImageBuffer::kChannels>(static_cast<Eigen::Index>(img.width) * ImageBuffer::kChannels,
                                                                ImageBuffer::kChannels)};
}

template <typename Scalar>
using PlaneRM = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// BT.601 luma, Y = 0.299 R + 0.587 G + 0.114 B, unrounded.
template <typename Scalar = double>
PlaneRM<Scalar> luma(const ImageBuffer& img) {
  return Scalar(0.299) * channel(img, 0).template cast<Scalar>() +
         Scalar(0.587) * channel(img, 1).template cast<Scalar>() +
         Scalar(0.114) * channel(img, 2).template cast<Scalar>();
}

/// Round-to-nearest and clamp into [0, 255].
template <typename Scalar>
std::uint8_t to_byte(Scalar v) {
  if (!(v > Scalar(0))) return 0;
  if (v >= Scalar(255)) return 255;
  return static_cast<std::uint8_t>(static_cast<int>(v + Scalar(0.5)));
}

/// Curve order n for a square image of side 32 * 2^n; throws ParameterError
/// for any other geometry.
int order_for_image(const ImageBuffer& img);

void check_same_shape(const ImageBuffer& a, const ImageBuffer& b);

}  // namespace fractalmark
