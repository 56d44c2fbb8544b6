#include "fractalmark/curves.hpp"
#include "fractalmark/errors.hpp"

#include <doctest.h>

#include <set>
#include <vector>

using namespace fractalmark;

namespace {

std::vector<std::pair<int, int>> cells(const CurveTraversal& t) {
  std::vector<std::pair<int, int>> out;
  for (Eigen::Index i = 0; i < t.size(); ++i) out.emplace_back(t.coords(0, i), t.coords(1, i));
  return out;
}

using Cells = std::vector<std::pair<int, int>>;

}  // namespace

TEST_CASE("hilbert order 1 is the base U") {
  const CurveTraversal t = hilbert_traversal(1);
  CHECK(cells(t) == Cells{{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  CHECK(has_unit_steps(t));
}

TEST_CASE("zorder order 1 and de-interleaving") {
  CHECK(cells(zorder_traversal(1)) == Cells{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  // Index 5 = 0b0101: x bits from positions 0 and 2 -> 0b11, y bits from 1 and 3 -> 0.
  const CurveTraversal z = zorder_traversal(2);
  CHECK(z.coords(0, 5) == 3);
  CHECK(z.coords(1, 5) == 0);
  // Index 10 = 0b1010 -> (0, 3).
  CHECK(z.coords(0, 10) == 0);
  CHECK(z.coords(1, 10) == 3);
}

TEST_CASE("base curves are bijections; hilbert steps are unit") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const CurveTraversal h = hilbert_traversal(n);
    CHECK(h.size() == (Eigen::Index{1} << (2 * n)));
    CHECK(is_bijection(h));
    CHECK(has_unit_steps(h));
    CHECK(is_bijection(zorder_traversal(n)));
  }
  CHECK_FALSE(has_unit_steps(zorder_traversal(2)));
}

TEST_CASE("identity variation leaves the curve alone") {
  const CurveTraversal h = hilbert_traversal(3);
  CHECK(apply_variation(h, VariationParams{}) == h);
}

TEST_CASE("rotation by 180 maps (x, y) to (7-x, 7-y)") {
  const CurveTraversal h = hilbert_traversal(3);
  const CurveTraversal r = apply_variation(h, VariationParams::make(2, 0, 0));
  for (Eigen::Index i = 0; i < h.size(); ++i) {
    CHECK(r.coords(0, i) == 7 - h.coords(0, i));
    CHECK(r.coords(1, i) == 7 - h.coords(1, i));
  }
  CHECK(has_unit_steps(r));
}

TEST_CASE("quarter turn") {
  const CurveTraversal r = apply_variation(hilbert_traversal(1), VariationParams::make(1, 0, 0));
  CHECK(cells(r) == Cells{{1, 0}, {0, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("reverse swaps start and end") {
  const CurveTraversal h = hilbert_traversal(3);
  const CurveTraversal r = apply_variation(h, VariationParams::make(0, 0, 1));
  CHECK(r.start() == h.end());
  CHECK(r.end() == h.start());
  for (Eigen::Index i = 0; i < h.size(); ++i) CHECK(r.coords.col(i) == h.coords.col(h.size() - 1 - i));
  CHECK(has_unit_steps(r));
}

TEST_CASE("mirrors only move cells inside their region") {
  const CurveTraversal h = hilbert_traversal(3);
  // Top half: cells with y < 4 are point-reflected inside rows 0..3.
  const CurveTraversal top = apply_variation(h, VariationParams::make(0, 1, 0));
  // Bottom-right quadrant: x >= 4 and y >= 4.
  const CurveTraversal br = apply_variation(h, VariationParams::make(0, 8, 0));
  for (Eigen::Index i = 0; i < h.size(); ++i) {
    const int x = h.coords(0, i), y = h.coords(1, i);
    if (y < 4) {
      CHECK(top.coords(0, i) == 7 - x);
      CHECK(top.coords(1, i) == 3 - y);
    } else {
      CHECK(top.coords.col(i) == h.coords.col(i));
    }
    if (x >= 4 && y >= 4) {
      CHECK(br.coords(0, i) == 11 - x);
      CHECK(br.coords(1, i) == 11 - y);
    } else {
      CHECK(br.coords.col(i) == h.coords.col(i));
    }
  }
}

TEST_CASE("zigzag and cross flip permute indices") {
  const CurveTraversal h = hilbert_traversal(2);
  const CurveTraversal z = apply_variation(h, VariationParams::make(0, 0, 2));
  for (int run = 0; run < 4; ++run)
    for (int j = 0; j < 4; ++j) {
      const int src = run * 4 + (run % 2 ? 3 - j : j);
      CHECK(z.coords.col(run * 4 + j) == h.coords.col(src));
    }
  const CurveTraversal c = apply_variation(h, VariationParams::make(0, 0, 3));
  for (int q = 0; q < 4; ++q)
    for (int j = 0; j < 4; ++j) CHECK(c.coords.col(q * 4 + j) == h.coords.col((3 - q) * 4 + j));
}

TEST_CASE("golden variants from the scripted oracle") {
  CHECK(cells(build_variant(CurveKind::Hilbert, 2, VariationParams::make(1, 5, 3))) ==
        Cells{{2, 3}, {2, 2}, {3, 2}, {3, 3}, {1, 2}, {0, 2}, {0, 3}, {1, 3},
              {0, 1}, {1, 1}, {1, 0}, {0, 0}, {3, 0}, {3, 1}, {2, 1}, {2, 0}});
  CHECK(cells(build_variant(CurveKind::ZOrder, 2, VariationParams::make(3, 2, 0))) ==
        Cells{{3, 2}, {3, 3}, {2, 2}, {2, 3}, {0, 1}, {0, 0}, {1, 1}, {1, 0},
              {1, 2}, {1, 3}, {0, 2}, {0, 3}, {2, 1}, {2, 0}, {3, 1}, {3, 0}});
}

TEST_CASE("variant counts and distinctness") {
  CHECK(variation_codes(CurveKind::Hilbert).size() == 144);
  CHECK(variation_codes(CurveKind::ZOrder).size() == 36);
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    for (CurveKind kind : {CurveKind::Hilbert, CurveKind::ZOrder}) {
      const auto variants = enumerate_variants(kind, n);
      std::set<std::string> distinct;
      for (const auto& [code, t] : variants) {
        CHECK(is_bijection(t));
        distinct.insert(to_text(t));
      }
      CHECK(distinct.size() == variants.size());
      CHECK(variants.size() == (kind == CurveKind::Hilbert ? 144u : 36u));
    }
  }
}

TEST_CASE("text form is deterministic") {
  const CurveTraversal t = build_variant(CurveKind::Hilbert, 1, VariationParams{});
  CHECK(to_text(t) == "0,0\n0,1\n1,1\n1,0\n");
  CHECK(to_text(build_variant(CurveKind::Hilbert, 4, VariationParams::make(3, 6, 2))) ==
        to_text(build_variant(CurveKind::Hilbert, 4, VariationParams::make(3, 6, 2))));
}

TEST_CASE("parameter errors") {
  CHECK_THROWS_AS(hilbert_traversal(0), ParameterError);
  CHECK_THROWS_AS(zorder_traversal(9), ParameterError);
  CHECK_THROWS_AS(VariationParams::make(4, 0, 0), ParameterError);
  CHECK_THROWS_AS(VariationParams::make(0, 9, 0), ParameterError);
  CHECK_THROWS_AS(VariationParams::make(0, 0, -1), ParameterError);
  CHECK_THROWS_AS(build_variant(CurveKind::ZOrder, 3, VariationParams::make(0, 0, 1)), ParameterError);
  CHECK_THROWS_AS(enumerate_variants(CurveKind::Hilbert, 1), ParameterError);
  CHECK(curve_kind_from_string("Z-Order") == CurveKind::ZOrder);
  CHECK_THROWS_AS(curve_kind_from_string("peano"), ParameterError);
}
