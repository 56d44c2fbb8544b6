#pragma once

#include "fractalmark/image.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace fractalmark {

/// Decodes PNG or JPEG (detected from the file signature) into 8-bit RGB.
/// Grey, palette, 16-bit and alpha inputs are converted; alpha is dropped.
ImageBuffer read_image(const std::filesystem::path& path);

/// Lossless PNG output.
void write_png(const std::filesystem::path& path, const ImageBuffer& img);

std::vector<std::uint8_t> encode_png(const ImageBuffer& img);
ImageBuffer decode_png(std::span<const std::uint8_t> bytes);

/// Baseline JPEG with libjpeg defaults (4:2:0 chroma subsampling, standard
/// tables scaled by `quality`).
std::vector<std::uint8_t> encode_jpeg(const ImageBuffer& img, int quality);
ImageBuffer decode_jpeg(std::span<const std::uint8_t> bytes);

}  // namespace fractalmark
