#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fractalmark {

enum class CurveKind { Hilbert, ZOrder };

std::string_view to_string(CurveKind kind);
/// Accepts "hilbert" or "zorder" (case-insensitive, "z-order" also allowed).
CurveKind curve_kind_from_string(std::string_view name);

enum class Rotation : std::uint8_t { R0 = 0, R90 = 1, R180 = 2, R270 = 3 };

enum class Mirror : std::uint8_t {
  None = 0,
  Top = 1,
  Bottom = 2,
  Left = 3,
  Right = 4,
  TopLeft = 5,
  TopRight = 6,
  BottomLeft = 7,
  BottomRight = 8,
};

enum class OrderMod : std::uint8_t { None = 0, Reverse = 1, Zigzag = 2, CrossFlip = 3 };

inline constexpr int kRotationCount = 4;
inline constexpr int kMirrorCount = 9;
inline constexpr int kOrderModCount = 4;
inline constexpr int kMinOrder = 1;
inline constexpr int kMaxOrder = 8;

/// Shape variation codes (r, m, o). Construct through `make` to get range
/// checking from raw integers.
struct VariationParams {
  Rotation rotation = Rotation::R0;
  Mirror mirror = Mirror::None;
  OrderMod order = OrderMod::None;

  static VariationParams make(int r, int m, int o);

  int r() const { return static_cast<int>(rotation); }
  int m() const { return static_cast<int>(mirror); }
  int o() const { return static_cast<int>(order); }

  bool is_identity() const {
    return rotation == Rotation::R0 && mirror == Mirror::None && order == OrderMod::None;
  }
  friend bool operator==(const VariationParams&, const VariationParams&) = default;
};

/// Throws ParameterError when `v` is not admissible for `kind` (Z-order
/// curves take no order modification).
void validate_variation(CurveKind kind, const VariationParams& v);

/// Ordered visit of every cell of a 2^n x 2^n grid. Column i of `coords`
/// holds (x, y) for curve index i; x is the column and y the row, with
/// (0, 0) the top-left cell.
struct CurveTraversal {
  CurveKind kind = CurveKind::Hilbert;
  int order = 0;
  Eigen::Matrix2Xi coords;

  int side() const { return 1 << order; }
  Eigen::Index size() const { return coords.cols(); }
  Eigen::Vector2i start() const { return coords.col(0); }
  Eigen::Vector2i end() const { return coords.col(coords.cols() - 1); }

  friend bool operator==(const CurveTraversal& a, const CurveTraversal& b) {
    return a.kind == b.kind && a.order == b.order && a.coords == b.coords;
  }
};

/// Hilbert curve of order n. The order-1 seed is the "U" opening downwards:
/// (0,0) -> (0,1) -> (1,1) -> (1,0).
CurveTraversal hilbert_traversal(int order);

/// Morton curve of order n; bit j of x sits at bit 2j of the index and bit j
/// of y at bit 2j+1, so order 1 visits (0,0) (1,0) (0,1) (1,1).
CurveTraversal zorder_traversal(int order);

CurveTraversal base_traversal(CurveKind kind, int order);

/// Applies rotation, then mirroring, then order modification.
///
/// Rotations are quarter turns of the whole grid, (x, y) -> (N-1-y, x) for
/// 90 degrees. Every mirror code names a region of the grid (a half or a
/// quadrant) and point-reflects the cells inside that region about the
/// region's centre, leaving all other cells in place.
/// Order modifications permute curve indices:
///   Reverse        index sequence reversed,
///   Zigzag         N runs of N indices; every odd run reversed,
///   CrossFlip      quarters of the sequence reordered back to front.
CurveTraversal apply_variation(const CurveTraversal& t, const VariationParams& v);

CurveTraversal build_variant(CurveKind kind, int order, const VariationParams& v);

/// All admissible variation codes for `kind`: 144 for Hilbert, 36 for Z-order.
std::vector<VariationParams> variation_codes(CurveKind kind);

/// Every variant of the base curve, in (r, m, o) lexicographic order.
/// Requires order >= 2.
std::vector<std::pair<VariationParams, CurveTraversal>> enumerate_variants(CurveKind kind,
                                                                           int order);

/// True iff every grid cell is visited exactly once.
bool is_bijection(const CurveTraversal& t);

/// True iff consecutive coordinates are 4-neighbours.
bool has_unit_steps(const CurveTraversal& t);

/// Canonical text form, one "x,y" line per index.
std::string to_text(const CurveTraversal& t);

}  // namespace fractalmark
