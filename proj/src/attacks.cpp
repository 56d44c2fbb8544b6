#include "fractalmark/attacks.hpp"

#include "fractalmark/errors.hpp"
#include "fractalmark/image_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

namespace fractalmark {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// std::normal_distribution is implementation defined; these helpers only use
// the raw mt19937_64 stream so results match across standard libraries.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double standard_normal(std::mt19937_64& rng) {
  double u1 = unit_uniform(rng);
  while (u1 <= 0.0) u1 = unit_uniform(rng);
  const double u2 = unit_uniform(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

int clamp_index(int v, int hi) { return std::clamp(v, 0, hi - 1); }

void check_rect(const ImageBuffer& img, const PixelRect& r) {
  if (r.width <= 0 || r.height <= 0) throw ParameterError("rectangle must have positive size");
  if (r.x % kPatchSize || r.y % kPatchSize || r.width % kPatchSize || r.height % kPatchSize) {
    throw ParameterError("rectangle must be aligned to the 32-pixel patch grid");
  }
  if (r.x < 0 || r.y < 0 || r.x + r.width > img.width || r.y + r.height > img.height) {
    throw ParameterError("rectangle extends outside the image");
  }
}

PixelRect place_crop(const ImageBuffer& img, const attack::CropPatches& c) {
  if (c.rect) return *c.rect;
  const int grid_w = img.width / kPatchSize;
  const int grid_h = img.height / kPatchSize;
  if (c.patches_wide > grid_w || c.patches_high > grid_h) throw ParameterError("crop block larger than the patch grid");
  std::mt19937_64 rng(c.seed);
  const int px = static_cast<int>(rng() % static_cast<std::uint64_t>(grid_w - c.patches_wide + 1));
  const int py = static_cast<int>(rng() % static_cast<std::uint64_t>(grid_h - c.patches_high + 1));
  return {px * kPatchSize, py * kPatchSize, c.patches_wide * kPatchSize, c.patches_high * kPatchSize};
}

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

std::string rect_text(const PixelRect& r) {
  return "x=" + std::to_string(r.x) + ",y=" + std::to_string(r.y) + ",w=" + std::to_string(r.width) +
         ",h=" + std::to_string(r.height);
}

std::vector<double> gaussian_kernel(int size, double sigma) {
  std::vector<double> k(static_cast<std::size_t>(size));
  const int half = size / 2;
  double sum = 0.0;
  for (int i = -half; i <= half; ++i) {
    const double w = std::exp(-(i * i) / (2.0 * sigma * sigma));
    k[static_cast<std::size_t>(i + half)] = w;
    sum += w;
  }
  for (double& w : k) w /= sum;
  return k;
}

}  // namespace

std::string_view to_string(AttackKind kind) {
  switch (kind) {
    case AttackKind::Identity: return "identity";
    case AttackKind::Jpeg: return "jpeg";
    case AttackKind::GaussianNoise: return "noise";
    case AttackKind::GaussianBlur: return "gblur";
    case AttackKind::MedianBlur: return "median";
    case AttackKind::Resize: return "resize";
    case AttackKind::CropPatches: return "crop";
    case AttackKind::Splice: return "splice";
    case AttackKind::GlobalPerturb: return "perturb";
  }
  return "unknown";
}

AttackKind AttackSpec::kind() const { return static_cast<AttackKind>(params.index()); }

std::string AttackSpec::describe() const {
  return std::visit(
      Overloaded{
          [](const attack::Identity&) { return std::string("identity"); },
          [](const attack::Jpeg& p) { return "jpeg:q=" + std::to_string(p.quality); },
          [](const attack::GaussianNoise& p) {
            return "noise:sigma=" + format_double(p.sigma) + ",seed=" + std::to_string(p.seed);
          },
          [](const attack::GaussianBlur& p) {
            return "gblur:k=" + std::to_string(p.kernel) + ",sigma=" + format_double(p.sigma);
          },
          [](const attack::MedianBlur& p) { return "median:k=" + std::to_string(p.kernel); },
          [](const attack::Resize& p) { return "resize:scale=" + format_double(p.scale); },
          [](const attack::CropPatches& p) {
            if (p.rect) return "crop:" + rect_text(*p.rect);
            return "crop:pw=" + std::to_string(p.patches_wide) + ",ph=" + std::to_string(p.patches_high) +
                   ",seed=" + std::to_string(p.seed);
          },
          [](const attack::Splice& p) { return "splice:" + rect_text(p.rect) + ",donor=" + p.donor_ref; },
          [](const attack::GlobalPerturb& p) {
            return "perturb:strength=" + format_double(p.strength) + ",seed=" + std::to_string(p.seed);
          },
      },
      params);
}

AttackSpec parse_attack(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string name(text.substr(0, colon));
  std::map<std::string, std::string> kv;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      const std::size_t comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) throw ParameterError("attack parameter '" + std::string(item) + "' lacks '='");
      kv[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
  }

  const auto take = [&](const std::string& key) -> std::optional<std::string> {
    const auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  const auto as_int = [&](const std::string& key, long long fallback) -> long long {
    const auto v = take(key);
    if (!v) return fallback;
    long long out = 0;
    const auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), out);
    if (ec != std::errc{} || ptr != v->data() + v->size()) throw ParameterError("'" + key + "' must be an integer");
    return out;
  };
  const auto as_double = [&](const std::string& key, double fallback) -> double {
    const auto v = take(key);
    if (!v) return fallback;
    std::size_t used = 0;
    double out = 0.0;
    try {
      out = std::stod(*v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != v->size()) throw ParameterError("'" + key + "' must be a number");
    return out;
  };
  const auto rect = [&]() {
    return PixelRect{static_cast<int>(as_int("x", 0)), static_cast<int>(as_int("y", 0)),
                     static_cast<int>(as_int("w", 0)), static_cast<int>(as_int("h", 0))};
  };

  AttackSpec spec;
  if (name == "identity") {
    spec.params = attack::Identity{};
  } else if (name == "jpeg") {
    spec.params = attack::Jpeg{static_cast<int>(as_int("q", 80))};
  } else if (name == "noise") {
    spec.params = attack::GaussianNoise{as_double("sigma", 5.0 / 255.0), static_cast<std::uint64_t>(as_int("seed", 0))};
  } else if (name == "gblur") {
    spec.params = attack::GaussianBlur{static_cast<int>(as_int("k", 3)), as_double("sigma", 1.0)};
  } else if (name == "median") {
    spec.params = attack::MedianBlur{static_cast<int>(as_int("k", 3))};
  } else if (name == "resize") {
    spec.params = attack::Resize{as_double("scale", 0.5)};
  } else if (name == "crop") {
    attack::CropPatches c;
    if (kv.contains("x") || kv.contains("w")) {
      c.rect = rect();
    } else {
      c.patches_wide = static_cast<int>(as_int("pw", 1));
      c.patches_high = static_cast<int>(as_int("ph", 1));
      c.seed = static_cast<std::uint64_t>(as_int("seed", 0));
    }
    spec.params = c;
  } else if (name == "splice") {
    attack::Splice s;
    s.rect = rect();
    s.donor_ref = take("donor").value_or("@next");
    spec.params = s;
  } else if (name == "perturb") {
    spec.params = attack::GlobalPerturb{as_double("strength", 1.0), static_cast<std::uint64_t>(as_int("seed", 0))};
  } else {
    throw ParameterError("unknown attack '" + name + "'");
  }
  if (!kv.empty()) throw ParameterError("unknown parameter '" + kv.begin()->first + "' for attack '" + name + "'");
  validate(spec);
  return spec;
}

void validate(const AttackSpec& spec) {
  std::visit(Overloaded{
                 [](const attack::Identity&) {},
                 [](const attack::Jpeg& p) {
                   if (p.quality < 1 || p.quality > 100) throw ParameterError("JPEG quality must lie in [1, 100]");
                 },
                 [](const attack::GaussianNoise& p) {
                   if (!(p.sigma >= 0.0 && p.sigma <= 1.0)) throw ParameterError("noise sigma must lie in [0, 1]");
                 },
                 [](const attack::GaussianBlur& p) {
                   if (p.kernel < 1 || p.kernel > 31 || p.kernel % 2 == 0)
                     throw ParameterError("blur kernel must be odd and in [1, 31]");
                   if (!(p.sigma > 0.0 && p.sigma <= 10.0)) throw ParameterError("blur sigma must lie in (0, 10]");
                 },
                 [](const attack::MedianBlur& p) {
                   if (p.kernel < 1 || p.kernel > 15 || p.kernel % 2 == 0)
                     throw ParameterError("median kernel must be odd and in [1, 15]");
                 },
                 [](const attack::Resize& p) {
                   if (!(p.scale >= 0.1 && p.scale <= 1.0)) throw ParameterError("resize scale must lie in [0.1, 1]");
                 },
                 [](const attack::CropPatches& p) {
                   if (!p.rect && (p.patches_wide < 1 || p.patches_high < 1))
                     throw ParameterError("crop block must cover at least one patch");
                 },
                 [](const attack::Splice& p) {
                   if (p.rect.width <= 0 || p.rect.height <= 0) throw ParameterError("splice rectangle must have positive size");
                 },
                 [](const attack::GlobalPerturb& p) {
                   if (!(p.strength >= 0.1 && p.strength <= 5.0))
                     throw ParameterError("perturbation strength must lie in [0.1, 5]");
                 },
             },
             spec.params);
}

ImageBuffer gaussian_blur(const ImageBuffer& img, int kernel, double sigma) {
  const std::vector<double> k = gaussian_kernel(kernel, sigma);
  const int half = kernel / 2;
  std::vector<double> tmp(img.data.size());
  // Horizontal pass into doubles, vertical pass back to bytes.
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      for (int c = 0; c < ImageBuffer::kChannels; ++c) {
        double acc = 0.0;
        for (int i = -half; i <= half; ++i) acc += k[static_cast<std::size_t>(i + half)] * img.at(clamp_index(x + i, img.width), y, c);
        tmp[img.index(x, y, c)] = acc;
      }
  ImageBuffer out = img;
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      for (int c = 0; c < ImageBuffer::kChannels; ++c) {
        double acc = 0.0;
        for (int i = -half; i <= half; ++i) acc += k[static_cast<std::size_t>(i + half)] * tmp[img.index(x, clamp_index(y + i, img.height), c)];
        out.at(x, y, c) = to_byte(acc);
      }
  return out;
}

ImageBuffer median_blur(const ImageBuffer& img, int kernel) {
  const int half = kernel / 2;
  ImageBuffer out = img;
  std::vector<std::uint8_t> window(static_cast<std::size_t>(kernel * kernel));
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      for (int c = 0; c < ImageBuffer::kChannels; ++c) {
        std::size_t n = 0;
        for (int dy = -half; dy <= half; ++dy)
          for (int dx = -half; dx <= half; ++dx)
            window[n++] = img.at(clamp_index(x + dx, img.width), clamp_index(y + dy, img.height), c);
        const auto mid = window.begin() + static_cast<std::ptrdiff_t>(n / 2);
        std::nth_element(window.begin(), mid, window.end());
        out.at(x, y, c) = *mid;
      }
  return out;
}

ImageBuffer resize_bilinear(const ImageBuffer& img, int width, int height) {
  if (width <= 0 || height <= 0) throw ParameterError("resize target must be positive");
  ImageBuffer out{width, height, std::vector<std::uint8_t>(static_cast<std::size_t>(width) * height * ImageBuffer::kChannels)};
  const double sx = static_cast<double>(img.width) / width;
  const double sy = static_cast<double>(img.height) / height;
  for (int y = 0; y < height; ++y) {
    const double fy = std::max(0.0, (y + 0.5) * sy - 0.5);
    const int y0 = std::min(static_cast<int>(fy), img.height - 1);
    const int y1 = std::min(y0 + 1, img.height - 1);
    const double wy = fy - y0;
    for (int x = 0; x < width; ++x) {
      const double fx = std::max(0.0, (x + 0.5) * sx - 0.5);
      const int x0 = std::min(static_cast<int>(fx), img.width - 1);
      const int x1 = std::min(x0 + 1, img.width - 1);
      const double wx = fx - x0;
      for (int c = 0; c < ImageBuffer::kChannels; ++c) {
        const double top = (1.0 - wx) * img.at(x0, y0, c) + wx * img.at(x1, y0, c);
        const double bottom = (1.0 - wx) * img.at(x0, y1, c) + wx * img.at(x1, y1, c);
        out.at(x, y, c) = to_byte((1.0 - wy) * top + wy * bottom);
      }
    }
  }
  return out;
}

ImageBuffer translate(const ImageBuffer& img, int dx, int dy) {
  ImageBuffer out = img;
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      for (int c = 0; c < ImageBuffer::kChannels; ++c)
        out.at(x, y, c) = img.at(clamp_index(x - dx, img.width), clamp_index(y - dy, img.height), c);
  return out;
}

PatchList patches_in(const PixelRect& rect) {
  PatchList out;
  for (int py = rect.y / kPatchSize; py < (rect.y + rect.height) / kPatchSize; ++py)
    for (int px = rect.x / kPatchSize; px < (rect.x + rect.width) / kPatchSize; ++px) out.emplace_back(px, py);
  return out;
}

AttackResult apply(const ImageBuffer& img, const AttackSpec& spec) {
  validate(spec);
  return std::visit(
      Overloaded{
          [&](const attack::Identity&) { return AttackResult{img, {}}; },
          [&](const attack::Jpeg& p) { return AttackResult{decode_jpeg(encode_jpeg(img, p.quality)), {}}; },
          [&](const attack::GaussianNoise& p) {
            std::mt19937_64 rng(p.seed);
            ImageBuffer out = img;
            const double sigma = p.sigma * 255.0;
            for (std::size_t i = 0; i < out.data.size(); ++i) {
              out.data[i] = to_byte(static_cast<double>(img.data[i]) + sigma * standard_normal(rng));
            }
            return AttackResult{std::move(out), {}};
          },
          [&](const attack::GaussianBlur& p) { return AttackResult{gaussian_blur(img, p.kernel, p.sigma), {}}; },
          [&](const attack::MedianBlur& p) { return AttackResult{median_blur(img, p.kernel), {}}; },
          [&](const attack::Resize& p) {
            const int w = std::max(1, static_cast<int>(std::lround(img.width * p.scale)));
            const int h = std::max(1, static_cast<int>(std::lround(img.height * p.scale)));
            return AttackResult{resize_bilinear(resize_bilinear(img, w, h), img.width, img.height), {}};
          },
          [&](const attack::CropPatches& p) {
            const PixelRect r = place_crop(img, p);
            check_rect(img, r);
            ImageBuffer out = img;
            for (int y = r.y; y < r.y + r.height; ++y)
              for (int x = r.x; x < r.x + r.width; ++x)
                for (int c = 0; c < ImageBuffer::kChannels; ++c) out.at(x, y, c) = 0;
            return AttackResult{std::move(out), patches_in(r)};
          },
          [&](const attack::Splice& p) {
            if (!p.donor) throw ParameterError("splice attack has no donor image loaded");
            check_rect(img, p.rect);
            if (p.donor->width < p.rect.x + p.rect.width || p.donor->height < p.rect.y + p.rect.height) {
              throw ParameterError("donor image does not cover the splice rectangle");
            }
            ImageBuffer out = img;
            for (int y = p.rect.y; y < p.rect.y + p.rect.height; ++y)
              for (int x = p.rect.x; x < p.rect.x + p.rect.width; ++x)
                for (int c = 0; c < ImageBuffer::kChannels; ++c) out.at(x, y, c) = p.donor->at(x, y, c);
            return AttackResult{std::move(out), patches_in(p.rect)};
          },
          [&](const attack::GlobalPerturb& p) {
            std::mt19937_64 rng(p.seed);
            const auto offset = [&rng] {
              const int magnitude = 1 + static_cast<int>(rng() % 2);
              return (rng() % 2) ? magnitude : -magnitude;
            };
            const int dx = offset();
            const int dy = offset();
            const int kernel = 2 * static_cast<int>(std::ceil(2.0 * p.strength)) + 1;
            return AttackResult{translate(gaussian_blur(img, kernel, p.strength), dx, dy), {}};
          },
      },
      spec.params);
}

std::vector<AttackSpec> default_benign_attacks(std::uint64_t seed) {
  return {AttackSpec{attack::Identity{}},       AttackSpec{attack::Jpeg{80}},
          AttackSpec{attack::GaussianNoise{5.0 / 255.0, seed}}, AttackSpec{attack::GaussianBlur{3, 1.0}},
          AttackSpec{attack::MedianBlur{3}},     AttackSpec{attack::Resize{0.5}}};
}

}  // namespace fractalmark
