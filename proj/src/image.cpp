#include "fractalmark/image.hpp"

#include "fractalmark/curves.hpp"
#include "fractalmark/errors.hpp"

#include <string>

namespace fractalmark {

ImageBuffer ImageBuffer::filled(int width, int height, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  if (width <= 0 || height <= 0) throw ParameterError("image dimensions must be positive");
  ImageBuffer img{width, height, std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height * kChannels)};
  for (std::size_t i = 0; i < img.data.size(); i += kChannels) {
    img.data[i] = r;
    img.data[i + 1] = g;
    img.data[i + 2] = b;
  }
  return img;
}

int order_for_image(const ImageBuffer& img) {
  const auto bad = [&] {
    return ParameterError("watermarking needs a square image with side 32 * 2^n (n in [1, 8]), got " +
                          std::to_string(img.width) + "x" + std::to_string(img.height));
  };
  if (img.width != img.height || img.width % kPatchSize != 0) throw bad();
  const int patches = img.width / kPatchSize;
  for (int n = kMinOrder; n <= kMaxOrder; ++n)
    if (patches == (1 << n)) return n;
  throw bad();
}

void check_same_shape(const ImageBuffer& a, const ImageBuffer& b) {
  if (a.width != b.width || a.height != b.height) {
    throw ParameterError("image dimensions differ: " + std::to_string(a.width) + "x" + std::to_string(a.height) +
                         " vs " + std::to_string(b.width) + "x" + std::to_string(b.height));
  }
}

}  // namespace fractalmark
