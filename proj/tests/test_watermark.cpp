#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace fractalmark;

namespace {

int changed_entries(const WatermarkMatrix& a, const WatermarkMatrix& b) {
  return static_cast<int>((a.entries.array() != b.entries.array()).count());
}

bool is_quadrant_code(int m) { return m >= 5; }

}  // namespace

TEST_CASE("raw matrix ranks the curve mod 16") {
  const CurveTraversal t = hilbert_traversal(1);
  const WatermarkMatrix m = raw_matrix(t);
  CHECK(m.at(0, 0) == 0);
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(1, 1) == 2);
  CHECK(m.at(1, 0) == 3);

  const CurveTraversal h = hilbert_traversal(3);
  const WatermarkMatrix r = raw_matrix(h);
  CHECK(r.at(h.coords(0, 0), h.coords(1, 0)) == 0);
  CHECK(r.at(h.coords(0, 16), h.coords(1, 16)) == 0);
  CHECK(r.at(h.coords(0, 63), h.coords(1, 63)) == 15);
}

TEST_CASE("reverse flips entry ranks along the curve") {
  const CurveTraversal h = hilbert_traversal(3);
  const CurveTraversal rev = apply_variation(h, VariationParams::make(0, 0, 1));
  const WatermarkMatrix a = raw_matrix(h);
  const WatermarkMatrix b = raw_matrix(rev);
  for (Eigen::Index i = 0; i < h.size(); ++i) {
    const int x = h.coords(0, i), y = h.coords(1, i);
    CHECK(b.at(x, y) == (63 - i) % 16);
    CHECK(a.at(x, y) == i % 16);
  }
}

TEST_CASE("encryption combiner") {
  const CurveTraversal t = hilbert_traversal(2);
  const WatermarkMatrix raw = raw_matrix(t);
  CHECK(encrypt(raw, t, DigitKeystream{std::vector<std::uint8_t>(16, 0)}) == raw);
  // Index 15 carries raw entry 15; digit 9 gives (15 + 9) mod 16 = 8.
  std::vector<std::uint8_t> digits(16, 0);
  digits[15] = 9;
  const WatermarkMatrix e = encrypt(raw, t, DigitKeystream{digits});
  CHECK(e.at(t.coords(0, 15), t.coords(1, 15)) == 8);
  CHECK_THROWS_AS(encrypt(raw, t, DigitKeystream{std::vector<std::uint8_t>(15, 0)}), ParameterError);
}

TEST_CASE("full pipeline matches the scripted oracle") {
  CHECK(to_text(generate(testing_support::example_key())) ==
        "ac60d178\n6b68b049\n7122020d\ne53113bd\n68c07bee\n60a6a85d\n052f5ab0\n124908c0\n");
  WatermarkKey z;
  z.kind = CurveKind::ZOrder;
  z.order = 3;
  z.variation = VariationParams::make(2, 7, 0);
  z.chaos = ChaosParams::make(0.77, 3.99, 1000, 12);
  CHECK(to_text(generate(z)) == "32bfffea\n53ef3d98\n7bc5cf88\nd4998494\n1a9b63b1\n4cdd4300\nd1f58747\n2ef5dda6\n");
}

TEST_CASE("matrix sizes") {
  const WatermarkMatrix m3 = generate(testing_support::example_key(3));
  CHECK(m3.size() * kBitsPerEntry == 256);
  const WatermarkMatrix m4 = generate(testing_support::example_key(4));
  CHECK(m4.size() * kBitsPerEntry == 1024);
  CHECK(generate(testing_support::example_key()) == generate(testing_support::example_key()));
}

TEST_CASE("changing d changes at least half of the entries") {
  WatermarkKey a = testing_support::example_key();
  for (int d = kMinDigit; d <= kMaxDigit; ++d) {
    if (d == a.chaos.d) continue;
    WatermarkKey b = a;
    b.chaos.d = d;
    CAPTURE(d);
    CHECK(changed_entries(generate(a), generate(b)) >= 32);
  }
}

TEST_CASE("single-field key sensitivity over sampled keys") {
  std::mt19937_64 rng(2024);
  double total[7] = {};
  int samples = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const WatermarkKey base = sample_key(rng());
    const WatermarkMatrix ref = generate(base);
    const auto frac = [&](const WatermarkKey& k) { return changed_entries(ref, generate(k)) / 64.0; };

    WatermarkKey k = base;
    k.variation.rotation = static_cast<Rotation>((base.variation.r() + 1 + rng() % 3) % 4);
    const double fr = frac(k);

    k = base;
    int m = base.variation.m();
    while (m == base.variation.m()) m = static_cast<int>(rng() % kMirrorCount);
    k.variation.mirror = static_cast<Mirror>(m);
    const double fm = frac(k);
    // A quadrant holds exactly a quarter of the cells, so None <-> corner
    // swaps cannot reach the bound; every other pair must.
    const bool corner_only = (base.variation.m() == 0 && is_quadrant_code(m)) ||
                             (m == 0 && is_quadrant_code(base.variation.m()));

    k = base;
    k.variation.order = static_cast<OrderMod>((base.variation.o() + 1 + rng() % 3) % 4);
    const double fo = frac(k);

    k = base;
    k.chaos.x0 = base.chaos.x0 < 0.5 ? base.chaos.x0 + 1e-6 : base.chaos.x0 - 1e-6;
    const double fx = frac(k);

    k = base;
    k.chaos.a = base.chaos.a < 3.85 ? base.chaos.a + 1e-6 : base.chaos.a - 1e-6;
    const double fa = frac(k);

    k = base;
    k.chaos.k = base.chaos.k < kMaxWarmup ? base.chaos.k + 1 : base.chaos.k - 1;
    const double fk = frac(k);

    k = base;
    k.chaos.d = base.chaos.d < kMaxDigit ? base.chaos.d + 1 : base.chaos.d - 1;
    const double fd = frac(k);

    CAPTURE(trial);
    CHECK(fr >= 0.25);
    if (corner_only) {
      CHECK(fm > 0.0);
      CHECK(fm <= 0.25);
    } else {
      CHECK(fm >= 0.25);
    }
    CHECK(fo >= 0.25);
    CHECK(fx >= 0.25);
    CHECK(fa >= 0.25);
    CHECK(fk >= 0.25);
    CHECK(fd >= 0.25);
    const double f[7] = {fr, fm, fo, fx, fa, fk, fd};
    for (int i = 0; i < 7; ++i) total[i] += f[i];
    ++samples;
  }
  for (double t : total) CHECK(t / samples >= 0.25);
}

TEST_CASE("channel-wise layout") {
  WatermarkMatrix m{1, ByteGrid::Zero(2, 2)};
  m.at(1, 0) = 9;
  const ChannelwiseWatermark c = to_channelwise(m);
  CHECK(c.planes[0](0, 1) == 1);
  CHECK(c.planes[1](0, 1) == 0);
  CHECK(c.planes[2](0, 1) == 0);
  CHECK(c.planes[3](0, 1) == 1);
  for (const ByteGrid& p : c.planes) CHECK(p(0, 0) == 0);
  CHECK(from_channelwise(c) == m);

  const WatermarkMatrix zero{3, ByteGrid::Zero(8, 8)};
  for (const ByteGrid& p : to_channelwise(zero).planes) CHECK(p.isZero());

  const WatermarkMatrix g = generate(testing_support::example_key(4));
  CHECK(from_channelwise(to_channelwise(g)) == g);

  ChannelwiseWatermark bad = to_channelwise(g);
  bad.planes[2](0, 0) = 2;
  CHECK_THROWS_AS(from_channelwise(bad), ParameterError);
  bad = to_channelwise(g);
  bad.planes[1].resize(3, 3);
  CHECK_THROWS_AS(from_channelwise(bad), ParameterError);
}

TEST_CASE("key validation") {
  WatermarkKey k = testing_support::example_key();
  k.order = 9;
  CHECK_THROWS_AS(validate(k), ParameterError);
  k = testing_support::example_key();
  k.kind = CurveKind::ZOrder;
  CHECK_THROWS_AS(generate(k), ParameterError);
  k.variation.order = OrderMod::None;
  CHECK_NOTHROW(generate(k));
}
