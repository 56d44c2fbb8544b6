#include "fractalmark/corpus.hpp"

#include "fractalmark/attacks.hpp"
#include "fractalmark/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

namespace fractalmark {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

struct Wave {
  double fx, fy, phase, amplitude;
};

// Smoothstep edge of width `soft` around the unit ellipse level set.
double ellipse_weight(double x, double y, double cx, double cy, double rx, double ry, double soft) {
  const double r = std::sqrt(((x - cx) / rx) * ((x - cx) / rx) + ((y - cy) / ry) * ((y - cy) / ry));
  const double t = std::clamp((1.0 - r) / soft + 0.5, 0.0, 1.0);
  return t * t * (3.0 - 2.0 * t);
}

}  // namespace

ImageBuffer synthetic_image(int side, std::uint64_t seed) {
  if (side < 8) throw ParameterError("synthetic images need side >= 8");
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 17);

  std::array<double, 3> bg_a{}, bg_b{}, skin{};
  for (int c = 0; c < 3; ++c) {
    bg_a[static_cast<std::size_t>(c)] = uniform(rng, 40, 210);
    bg_b[static_cast<std::size_t>(c)] = uniform(rng, 40, 210);
  }
  skin = {uniform(rng, 150, 220), uniform(rng, 100, 170), uniform(rng, 80, 140)};
  const double grad_angle = uniform(rng, 0, 2 * std::numbers::pi);

  std::vector<Wave> waves;
  for (int i = 0; i < 6; ++i) {
    waves.push_back({uniform(rng, -4, 4), uniform(rng, -4, 4), uniform(rng, 0, 2 * std::numbers::pi), uniform(rng, 3, 12)});
  }

  const double cx = 0.5 + uniform(rng, -0.05, 0.05);
  const double cy = 0.5 + uniform(rng, -0.05, 0.05);
  const double rx = uniform(rng, 0.2, 0.28);
  const double ry = rx * uniform(rng, 1.15, 1.35);
  const double eye_dx = rx * 0.42;
  const double eye_y = cy - ry * 0.2;
  const double eye_r = rx * uniform(rng, 0.1, 0.15);
  const double mouth_y = cy + ry * 0.45;

  std::vector<double> texture(static_cast<std::size_t>(side) * side);
  for (double& t : texture) t = uniform(rng, -1, 1);
  std::vector<double> grain(texture.size());
  for (double& t : grain) t = uniform(rng, -1, 1);
  const double grain_amplitude = uniform(rng, 2, 7);

  // Hair: fine oriented strands over the top of the face ellipse.
  const double strand_freq = uniform(rng, 40, 90);
  const double strand_angle = uniform(rng, -0.6, 0.6);
  const double hair_value = uniform(rng, 30, 120);

  ImageBuffer img = ImageBuffer::filled(side, side, 0, 0, 0);
  for (int y = 0; y < side; ++y) {
    for (int x = 0; x < side; ++x) {
      const double u = (x + 0.5) / side;
      const double v = (y + 0.5) / side;
      const double g = 0.5 + 0.5 * std::sin(grad_angle) * (u - 0.5) * 2 + 0.5 * std::cos(grad_angle) * (v - 0.5);
      double shade = 0.0;
      for (const Wave& w : waves) shade += w.amplitude * std::sin(2 * std::numbers::pi * (w.fx * u + w.fy * v) + w.phase);

      const double face = ellipse_weight(u, v, cx, cy, rx, ry, 0.03);
      const double eyes = std::max(ellipse_weight(u, v, cx - eye_dx, eye_y, eye_r, eye_r * 0.7, 0.3),
                                   ellipse_weight(u, v, cx + eye_dx, eye_y, eye_r, eye_r * 0.7, 0.3));
      const double mouth = ellipse_weight(u, v, cx, mouth_y, rx * 0.35, ry * 0.06, 0.4);
      // Local texture: a 3x3 blur of white noise.
      double tex = 0.0;
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          const int xx = std::clamp(x + dx, 0, side - 1);
          const int yy = std::clamp(y + dy, 0, side - 1);
          tex += texture[static_cast<std::size_t>(yy) * side + xx];
        }
      tex *= 6.0 / 9.0;
      tex += grain_amplitude * grain[static_cast<std::size_t>(y) * side + x];

      const double hair_region = ellipse_weight(u, v, cx, cy - ry * 0.35, rx * 1.15, ry * 0.8, 0.08) *
                                 std::clamp((eye_y - eye_r - v) / 0.05 + 0.5, 0.0, 1.0);
      const double strands = 0.5 + 0.5 * std::sin(2 * std::numbers::pi * strand_freq *
                                                   (u * std::cos(strand_angle) + v * std::sin(strand_angle)) +
                                                   3.0 * std::sin(9.0 * v));

      for (int c = 0; c < 3; ++c) {
        const auto ci = static_cast<std::size_t>(c);
        double value = (1 - g) * bg_a[ci] + g * bg_b[ci] + shade;
        const double face_value = skin[ci] + 0.4 * shade - 25.0 * ((u - cx) * (u - cx) + (v - cy) * (v - cy)) / (rx * rx);
        value = (1 - face) * value + face * face_value;
        value = (1 - eyes * face) * value + eyes * face * 45.0;
        value = (1 - mouth * face) * value + mouth * face * (c == 0 ? 140.0 : 70.0);
        value = (1 - hair_region) * value + hair_region * (hair_value + 50.0 * strands - 10.0 * c);
        value += tex;
        img.at(x, y, c) = to_byte(std::clamp(value, 8.0, 247.0));
      }
    }
  }
  return img;
}

std::vector<ImageBuffer> synthetic_corpus(int count, int side, std::uint64_t base_seed) {
  std::vector<ImageBuffer> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(synthetic_image(side, base_seed + static_cast<std::uint64_t>(i)));
  return out;
}

ImageBuffer prepare_square(const ImageBuffer& img, int side) {
  if (side <= 0) throw ParameterError("target side must be positive");
  if (img.empty()) throw ParameterError("cannot prepare an empty image");
  const int crop = std::min(img.width, img.height);
  const int x0 = (img.width - crop) / 2;
  const int y0 = (img.height - crop) / 2;
  ImageBuffer square = ImageBuffer::filled(crop, crop, 0, 0, 0);
  for (int y = 0; y < crop; ++y)
    for (int x = 0; x < crop; ++x)
      for (int c = 0; c < ImageBuffer::kChannels; ++c) square.at(x, y, c) = img.at(x0 + x, y0 + y, c);

  while (square.width >= 2 * side && square.width >= 2) {
    const int half = square.width / 2;
    ImageBuffer next = ImageBuffer::filled(half, half, 0, 0, 0);
    for (int y = 0; y < half; ++y)
      for (int x = 0; x < half; ++x)
        for (int c = 0; c < ImageBuffer::kChannels; ++c) {
          const int sum = square.at(2 * x, 2 * y, c) + square.at(2 * x + 1, 2 * y, c) + square.at(2 * x, 2 * y + 1, c) +
                          square.at(2 * x + 1, 2 * y + 1, c);
          next.at(x, y, c) = static_cast<std::uint8_t>((sum + 2) / 4);
        }
    square = std::move(next);
  }
  if (square.width == side) return square;
  return resize_bilinear(square, side, side);
}

std::vector<std::filesystem::path> list_png_files(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw IoError("'" + dir.string() + "' is not a directory");
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (ext == ".png") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fractalmark
