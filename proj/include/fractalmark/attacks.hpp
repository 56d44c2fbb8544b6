#pragma once

#include "fractalmark/image.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fractalmark {

enum class AttackKind { Identity, Jpeg, GaussianNoise, GaussianBlur, MedianBlur, Resize, CropPatches, Splice, GlobalPerturb };

std::string_view to_string(AttackKind kind);

/// Axis-aligned pixel rectangle. Crop and splice rectangles must start and
/// end on the 32-pixel patch grid.
struct PixelRect {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;

  friend bool operator==(const PixelRect&, const PixelRect&) = default;
};

namespace attack {

struct Identity {};

struct Jpeg {
  int quality = 80;
};

/// Zero-mean Gaussian noise; sigma is a fraction of full scale (1.0 = 255).
struct GaussianNoise {
  double sigma = 5.0 / 255.0;
  std::uint64_t seed = 0;
};

struct GaussianBlur {
  int kernel = 3;
  double sigma = 1.0;
};

struct MedianBlur {
  int kernel = 3;
};

/// Bilinear downscale by `scale`, then bilinear back to the original size.
struct Resize {
  double scale = 0.5;
};

/// Black fill over a patch-aligned rectangle. Either `rect` is given, or a
/// block of patches_wide x patches_high patches is placed at a position drawn
/// from `seed`.
struct CropPatches {
  std::optional<PixelRect> rect;
  int patches_wide = 1;
  int patches_high = 1;
  std::uint64_t seed = 0;
};

/// Copies `rect` from `donor` over the same rectangle of the target.
/// `donor_ref` names the donor for reports (a path, or "@next" for the next
/// corpus image).
struct Splice {
  PixelRect rect;
  std::string donor_ref;
  std::shared_ptr<const ImageBuffer> donor;
};

/// Whole-frame change: Gaussian blur with sigma = strength, followed by a
/// 1 or 2 pixel translation along each axis in seeded directions.
struct GlobalPerturb {
  double strength = 1.0;
  std::uint64_t seed = 0;
};

}  // namespace attack

struct AttackSpec {
  std::variant<attack::Identity, attack::Jpeg, attack::GaussianNoise, attack::GaussianBlur, attack::MedianBlur,
               attack::Resize, attack::CropPatches, attack::Splice, attack::GlobalPerturb>
      params;

  AttackKind kind() const;
  std::string name() const { return std::string(to_string(kind())); }
  /// Canonical "name:key=value,..." form; `parse_attack` reads it back.
  std::string describe() const;
};

/// Parses "identity", "jpeg:q=80", "noise:sigma=0.0196,seed=3", "gblur:k=3,sigma=1",
/// "median:k=3", "resize:scale=0.5", "crop:x=0,y=0,w=64,h=64", "crop:pw=3,ph=3,seed=1",
/// "splice:x=96,y=96,w=128,h=128,donor=<path|@next>", "perturb:strength=1,seed=0".
/// Omitted keys take the documented defaults. Splice donors are left
/// unresolved; the caller loads the image.
AttackSpec parse_attack(std::string_view text);

/// Throws ParameterError for out-of-range parameters.
void validate(const AttackSpec& spec);

using PatchList = std::vector<Eigen::Vector2i>;

struct AttackResult {
  ImageBuffer image;
  /// Patch coordinates overwritten by CropPatches or Splice, sorted by
  /// (y, x). Empty for whole-image attacks.
  PatchList destroyed;
};

AttackResult apply(const ImageBuffer& img, const AttackSpec& spec);

// Building blocks, exposed for reuse and testing.
ImageBuffer gaussian_blur(const ImageBuffer& img, int kernel, double sigma);
ImageBuffer median_blur(const ImageBuffer& img, int kernel);
ImageBuffer resize_bilinear(const ImageBuffer& img, int width, int height);
ImageBuffer translate(const ImageBuffer& img, int dx, int dy);
PatchList patches_in(const PixelRect& rect);

/// Default benign attacks: Identity, JPEG 80, noise 5/255, Gaussian blur 3x3
/// sigma 1, median 3x3, resize 0.5.
std::vector<AttackSpec> default_benign_attacks(std::uint64_t seed = 0);

}  // namespace fractalmark
