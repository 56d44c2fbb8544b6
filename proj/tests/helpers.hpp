#pragma once

#include "fractalmark/fractalmark.hpp"

#include <filesystem>
#include <random>
#include <string>

namespace testing_support {

inline fractalmark::WatermarkKey example_key(int order = 3) {
  fractalmark::WatermarkKey key;
  key.kind = fractalmark::CurveKind::Hilbert;
  key.order = order;
  key.variation = fractalmark::VariationParams::make(1, 4, 2);
  key.chaos = fractalmark::ChaosParams::make(0.31, 3.91, 250, 7);
  return key;
}

/// Fresh, empty scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("fractalmark_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline fractalmark::ImageBuffer noise_image(int side, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  fractalmark::ImageBuffer img = fractalmark::ImageBuffer::filled(side, side, 0, 0, 0);
  for (auto& v : img.data) v = static_cast<std::uint8_t>(rng() & 0xFF);
  return img;
}

}  // namespace testing_support
