#pragma once

#include "fractalmark/image.hpp"

#include <cstdint>
#include <filesystem>
#include <vector>

namespace fractalmark {

/// Deterministic portrait-like test image: smooth coloured background,
/// low-frequency shading, a centred face-like ellipse with features, and
/// mild fine texture. Pixel values stay inside [8, 247].
ImageBuffer synthetic_image(int side, std::uint64_t seed);

/// `count` synthetic images with seeds base_seed, base_seed + 1, ...
std::vector<ImageBuffer> synthetic_corpus(int count, int side, std::uint64_t base_seed = 1);

/// Centre-crops to a square and resamples to side x side. Large reductions
/// halve with 2x2 averaging before the final bilinear step.
ImageBuffer prepare_square(const ImageBuffer& img, int side);

/// PNG files directly inside `dir`, sorted by filename.
std::vector<std::filesystem::path> list_png_files(const std::filesystem::path& dir);

}  // namespace fractalmark
