#include "fractalmark/curves.hpp"

#include "fractalmark/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>

namespace fractalmark {

namespace {

void check_order(int order) {
  if (order < kMinOrder || order > kMaxOrder) {
    throw ParameterError("curve order must lie in [" + std::to_string(kMinOrder) + ", " +
                         std::to_string(kMaxOrder) + "], got " + std::to_string(order));
  }
}

// Classic iterative index -> (x, y) Hilbert decoding.
Eigen::Vector2i hilbert_point(int side, std::int64_t index) {
  int x = 0;
  int y = 0;
  std::int64_t t = index;
  for (int s = 1; s < side; s *= 2) {
    const int rx = static_cast<int>(1 & (t / 2));
    const int ry = static_cast<int>(1 & (t ^ rx));
    if (ry == 0) {
      if (rx == 1) {
        x = s - 1 - x;
        y = s - 1 - y;
      }
      std::swap(x, y);
    }
    x += s * rx;
    y += s * ry;
    t /= 4;
  }
  return {x, y};
}

Eigen::Vector2i morton_point(int order, std::int64_t index) {
  int x = 0;
  int y = 0;
  for (int j = 0; j < order; ++j) {
    x |= static_cast<int>((index >> (2 * j)) & 1) << j;
    y |= static_cast<int>((index >> (2 * j + 1)) & 1) << j;
  }
  return {x, y};
}

struct Region {
  int x0, y0, width, height;

  bool contains(const Eigen::Vector2i& p) const {
    return p.x() >= x0 && p.x() < x0 + width && p.y() >= y0 && p.y() < y0 + height;
  }
};

Region mirror_region(Mirror m, int side) {
  const int h = side / 2;
  switch (m) {
    case Mirror::Top: return {0, 0, side, h};
    case Mirror::Bottom: return {0, h, side, h};
    case Mirror::Left: return {0, 0, h, side};
    case Mirror::Right: return {h, 0, h, side};
    case Mirror::TopLeft: return {0, 0, h, h};
    case Mirror::TopRight: return {h, 0, h, h};
    case Mirror::BottomLeft: return {0, h, h, h};
    case Mirror::BottomRight: return {h, h, h, h};
    case Mirror::None: break;
  }
  return {0, 0, 0, 0};
}

void rotate(Eigen::Matrix2Xi& coords, Rotation r, int side) {
  // One quarter turn: (x, y) -> (N-1-y, x).
  Eigen::Matrix2i quarter;
  quarter << 0, -1, 1, 0;
  const Eigen::Vector2i shift(side - 1, 0);
  for (int i = 0; i < static_cast<int>(r); ++i) {
    coords = (quarter * coords).colwise() + shift;
  }
}

void mirror(Eigen::Matrix2Xi& coords, Mirror m, int side) {
  if (m == Mirror::None) return;
  const Region region = mirror_region(m, side);
  const Eigen::Vector2i corner_sum(2 * region.x0 + region.width - 1,
                                   2 * region.y0 + region.height - 1);
  for (Eigen::Index i = 0; i < coords.cols(); ++i) {
    const Eigen::Vector2i p = coords.col(i);
    if (region.contains(p)) coords.col(i) = corner_sum - p;
  }
}

void reorder(Eigen::Matrix2Xi& coords, OrderMod o, int side) {
  const Eigen::Index length = coords.cols();
  switch (o) {
    case OrderMod::None:
      return;
    case OrderMod::Reverse:
      coords = coords.rowwise().reverse().eval();
      return;
    case OrderMod::Zigzag:
      for (Eigen::Index run = 1; run < side; run += 2) {
        auto block = coords.middleCols(run * side, side);
        block = block.rowwise().reverse().eval();
      }
      return;
    case OrderMod::CrossFlip: {
      const Eigen::Index q = length / 4;
      Eigen::Matrix2Xi out(2, length);
      for (Eigen::Index k = 0; k < 4; ++k) out.middleCols(k * q, q) = coords.middleCols((3 - k) * q, q);
      coords = std::move(out);
      return;
    }
  }
}

}  // namespace

std::string_view to_string(CurveKind kind) {
  return kind == CurveKind::Hilbert ? "hilbert" : "zorder";
}

CurveKind curve_kind_from_string(std::string_view name) {
  std::string lowered;
  for (char c : name) {
    if (c == '-' || c == '_') continue;
    lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (lowered == "hilbert") return CurveKind::Hilbert;
  if (lowered == "zorder" || lowered == "morton") return CurveKind::ZOrder;
  throw ParameterError("unknown curve kind '" + std::string(name) + "'");
}

VariationParams VariationParams::make(int r, int m, int o) {
  if (r < 0 || r >= kRotationCount) throw ParameterError("rotation code must lie in [0, 3]");
  if (m < 0 || m >= kMirrorCount) throw ParameterError("mirror code must lie in [0, 8]");
  if (o < 0 || o >= kOrderModCount) throw ParameterError("order modification code must lie in [0, 3]");
  return {static_cast<Rotation>(r), static_cast<Mirror>(m), static_cast<OrderMod>(o)};
}

void validate_variation(CurveKind kind, const VariationParams& v) {
  // Re-check in case the enums were cast from unchecked integers.
  (void)VariationParams::make(v.r(), v.m(), v.o());
  if (kind == CurveKind::ZOrder && v.order != OrderMod::None) {
    throw ParameterError("z-order curves take no order modification (o must be 0)");
  }
}

CurveTraversal hilbert_traversal(int order) {
  check_order(order);
  CurveTraversal t{CurveKind::Hilbert, order, Eigen::Matrix2Xi(2, Eigen::Index{1} << (2 * order))};
  const int side = t.side();
  for (Eigen::Index i = 0; i < t.coords.cols(); ++i) t.coords.col(i) = hilbert_point(side, i);
  return t;
}

CurveTraversal zorder_traversal(int order) {
  check_order(order);
  CurveTraversal t{CurveKind::ZOrder, order, Eigen::Matrix2Xi(2, Eigen::Index{1} << (2 * order))};
  for (Eigen::Index i = 0; i < t.coords.cols(); ++i) t.coords.col(i) = morton_point(order, i);
  return t;
}

CurveTraversal base_traversal(CurveKind kind, int order) {
  return kind == CurveKind::Hilbert ? hilbert_traversal(order) : zorder_traversal(order);
}

CurveTraversal apply_variation(const CurveTraversal& t, const VariationParams& v) {
  check_order(t.order);
  validate_variation(t.kind, v);
  if (t.coords.cols() != (Eigen::Index{1} << (2 * t.order))) {
    throw ParameterError("traversal length does not match its order");
  }
  CurveTraversal out = t;
  rotate(out.coords, v.rotation, t.side());
  mirror(out.coords, v.mirror, t.side());
  reorder(out.coords, v.order, t.side());
  return out;
}

CurveTraversal build_variant(CurveKind kind, int order, const VariationParams& v) {
  return apply_variation(base_traversal(kind, order), v);
}

std::vector<VariationParams> variation_codes(CurveKind kind) {
  const int orders = kind == CurveKind::Hilbert ? kOrderModCount : 1;
  std::vector<VariationParams> codes;
  codes.reserve(static_cast<std::size_t>(kRotationCount * kMirrorCount * orders));
  for (int r = 0; r < kRotationCount; ++r)
    for (int m = 0; m < kMirrorCount; ++m)
      for (int o = 0; o < orders; ++o) codes.push_back(VariationParams::make(r, m, o));
  return codes;
}

std::vector<std::pair<VariationParams, CurveTraversal>> enumerate_variants(CurveKind kind,
                                                                           int order) {
  if (order < 2) throw ParameterError("variant enumeration requires order >= 2");
  const CurveTraversal base = base_traversal(kind, order);
  std::vector<std::pair<VariationParams, CurveTraversal>> out;
  for (const VariationParams& v : variation_codes(kind)) out.emplace_back(v, apply_variation(base, v));
  return out;
}

bool is_bijection(const CurveTraversal& t) {
  const int side = t.side();
  if (t.coords.cols() != static_cast<Eigen::Index>(side) * side) return false;
  std::vector<bool> seen(static_cast<std::size_t>(side) * side, false);
  for (Eigen::Index i = 0; i < t.coords.cols(); ++i) {
    const int x = t.coords(0, i);
    const int y = t.coords(1, i);
    if (x < 0 || y < 0 || x >= side || y >= side) return false;
    const auto cell = static_cast<std::size_t>(y) * side + x;
    if (seen[cell]) return false;
    seen[cell] = true;
  }
  return true;
}

bool has_unit_steps(const CurveTraversal& t) {
  for (Eigen::Index i = 1; i < t.coords.cols(); ++i) {
    if ((t.coords.col(i) - t.coords.col(i - 1)).cwiseAbs().sum() != 1) return false;
  }
  return true;
}

std::string to_text(const CurveTraversal& t) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < t.coords.cols(); ++i) out << t.coords(0, i) << ',' << t.coords(1, i) << '\n';
  return out.str();
}

}  // namespace fractalmark
