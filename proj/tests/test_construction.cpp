#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "polestrata/compact.hpp"
#include "polestrata/families.hpp"
#include "polestrata/io.hpp"
#include "polestrata/surface.hpp"

using namespace polestrata;

namespace {

bool has(const std::vector<Violation>& v, Violation x) { return std::find(v.begin(), v.end(), x) != v.end(); }

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}

// Poles read straight off the layout: (order, residue) per chain and cylinder block.
std::vector<std::pair<int, std::string>> layout_poles(const Layout& L, const std::vector<Cx>& zeta) {
  std::vector<std::pair<int, std::string>> out;
  auto sum = [&](const std::vector<int>& labels) {
    Cx s(0, 0);
    for (int l : labels) s = s + zeta[l - 1];
    return s;
  };
  for (const auto& chain : L.chains) {
    Cx r(0, 0);
    for (const auto& [top, bot] : chain) r = r + sum(top) - sum(bot);
    out.emplace_back(static_cast<int>(chain.size()) + 1, to_string(r));
  }
  for (const auto& c : L.cplus) out.emplace_back(1, to_string(sum(c)));
  for (const auto& c : L.cminus) out.emplace_back(1, to_string(-sum(c)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Validate, PoleThreeFigureIsValid) { EXPECT_TRUE(validate_datum(fixtures::pole3()).empty()); }

TEST(Validate, NonMonotonicBreaks) {
  Datum x = fixtures::pole3();
  x.nplus = {0, 3, 2};
  EXPECT_TRUE(has(validate_datum(x), Violation::NonMonotonicBreaks));
}

TEST(Validate, EmptyCylinder) {
  Datum x;
  x.n = 1;
  x.pi_t = {1};
  x.pi_b = {1};
  x.nplus = {0, 1, 1};
  x.nminus = {0, 0, 1};
  x.d_breaks = {0, 1};
  x.splus = 1;
  x.sminus = 1;
  EXPECT_TRUE(has(validate_datum(x), Violation::EmptyCylinder));
}

TEST(Validate, NotAPermutation) {
  Datum x = fixtures::pole3();
  x.pi_b = {1, 1, 3, 4};
  EXPECT_TRUE(has(validate_datum(x), Violation::NotAPermutation));
}

TEST(Assemble, PoleThreeFigure) {
  Surface S = assemble(fixtures::pole3());
  EXPECT_EQ(singularity_degrees(S), std::vector<int>({5}));
  ASSERT_EQ(S.poles.size(), 1u);
  EXPECT_EQ(S.poles[0].order, 3);
  EXPECT_EQ(stratum_of(S), Signature({5}, {3}));
  EXPECT_EQ(surface_genus(S), 2);
}

TEST(Assemble, TwoPolesFigure) {
  Surface S = assemble(fixtures::two_poles());
  EXPECT_EQ(singularity_degrees(S), std::vector<int>({2, 2}));
  EXPECT_EQ(stratum_of(S), Signature({2, 2}, {2, 2}));
  EXPECT_EQ(surface_genus(S), 1);
  // Chain D_0 carries top z1 z2 / bottom z2 z3, so its residue is z1 - z3.
  const auto z = default_zeta(4);
  std::vector<std::string> got, want{to_string(z[0] - z[2]), to_string(z[2] - z[0])};
  for (const auto& p : S.poles) got.push_back(to_string(p.residue));
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  EXPECT_EQ(got, want);
}

TEST(Assemble, PlaneWithMarkedPoint) {
  Surface S = assemble(fixtures::plane());
  EXPECT_EQ(singularity_degrees(S), std::vector<int>({0}));
  ASSERT_EQ(S.poles.size(), 1u);
  EXPECT_EQ(S.poles[0].order, 2);
  EXPECT_TRUE(S.poles[0].residue.is_zero());
  EXPECT_EQ(stratum_of(S), Signature({0}, {2}));
  EXPECT_EQ(surface_genus(S), 0);
}

TEST(Assemble, CylinderPairGivesSimplePoles) {
  const Cx z(2, 3);
  Surface S = assemble(fixtures::single_cylinder_pair(), {z});
  ASSERT_EQ(S.poles.size(), 2u);
  for (const auto& p : S.poles) {
    EXPECT_EQ(p.order, 1);
    EXPECT_TRUE(p.residue == z || p.residue == -z);
  }
  EXPECT_EQ(stratum_of(S), Signature({0}, {1, 1}));
}

TEST(Assemble, Errors) {
  EXPECT_EQ(code_of([] { assemble(fixtures::pole3(), {Cx(1, 0), Cx(0, 1), Cx(1, 1), Cx(2, 0)}); }),
            Errc::NonPositiveRealPart);
  EXPECT_EQ(code_of([] { assemble(fixtures::pole3(), {Cx(1, 0)}); }), Errc::MalformedDatum);
  Datum bad = fixtures::pole3();
  bad.pi_t = {1, 2, 2, 4};
  EXPECT_EQ(code_of([&] { assemble(bad); }), Errc::MalformedDatum);
  // Two separate planes.
  Datum two;
  two.n = 0;
  two.nplus = {0, 0, 0};
  two.nminus = {0, 0, 0};
  two.d_breaks = {0, 1, 2};
  EXPECT_EQ(code_of([&] { assemble(two); }), Errc::Disconnected);
}

TEST(Assemble, GluingTableIsDeterministic) {
  const auto a = gluing_table(assemble(fixtures::pole3()));
  const auto b = gluing_table(assemble(fixtures::pole3()));
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("D+_0.z1 <-> D-_1.z1"), std::string::npos);
}

TEST(Parallelogram, SquareAndFlippedSurfaces) {
  EXPECT_EQ(stratum_of(parallelogram_example(Cx(1, Rational(1, 2)), Cx(1, Rational(-1, 2)))), Signature({2}, {2}));
  EXPECT_EQ(stratum_of(parallelogram_example(Cx(1, 0), Cx(1, 0))), Signature({2}, {2}));
  EXPECT_EQ(stratum_of(parallelogram_example(Cx(1, -1), Cx(1, 1))), Signature({2}, {2}));
  EXPECT_THROW(parallelogram_example(Cx(0, 1), Cx(1, 1)), Error);
}

TEST(BubbledTorus, Strata) {
  EXPECT_EQ(stratum_of(assemble(bubbled_torus(1, {2}).datum)), Signature({2}, {2}));
  EXPECT_EQ(stratum_of(assemble(bubbled_torus(2, {4}).datum)), Signature({4}, {4}));
  EXPECT_EQ(stratum_of(assemble(bubbled_torus(1, {1, 1}).datum)), Signature({2}, {1, 1}));
  EXPECT_EQ(stratum_of(assemble(bubbled_torus(3, {2, 3}).datum)), Signature({5}, {2, 3}));
  EXPECT_THROW(bubbled_torus(2, {2}), Error);
  EXPECT_THROW(bubbled_torus(0, {4}), Error);
}

TEST(BubbledTorus, EveryParameterLandsInTheMinimalStratum) {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k) {
      for (const auto& poles : std::vector<std::vector<int>>{{n}, {1, n - 1}, {n / 2, n - n / 2}}) {
        if (std::find(poles.begin(), poles.end(), 0) != poles.end()) continue;
        auto F = bubbled_torus(k, poles);
        Surface S = assemble(F.datum, F.zeta);
        EXPECT_EQ(stratum_of(S), Signature({n}, poles)) << n << " " << k;
        EXPECT_EQ(surface_genus(S), 1);
      }
    }
}

TEST(RealizeBubbles, GenusGrowsByOnePerBubble) {
  EXPECT_EQ(stratum_of(assemble(realize_bubbles({2}, {1, 2}))), Signature({4}, {2}));
  EXPECT_EQ(stratum_of(assemble(realize_bubbles({1, 1}, {1, 3, 2}))), Signature({6}, {1, 1}));
  EXPECT_EQ(surface_genus(assemble(realize_bubbles({3}, {2, 1, 5}))), 3);
}

TEST(Closing, TwoSimplePoles) {
  auto F = bubbled_torus(1, {1, 1});
  CompactSurface C = close_two_simple_poles(assemble(F.datum, F.zeta));
  EXPECT_EQ(compact_degrees(C), std::vector<int>({2}));
  EXPECT_EQ(compact_genus(C), 2);
  Surface S = assemble(realize_bubbles({1, 1}, {1, 3}));
  ASSERT_EQ(stratum_of(S), Signature({4}, {1, 1}));
  CompactSurface D = close_two_simple_poles(S, Rational(1, 3));
  EXPECT_EQ(compact_degrees(D), std::vector<int>({4}));
  EXPECT_EQ(compact_genus(D), 3);
  EXPECT_EQ(code_of([] { close_two_simple_poles(assemble(fixtures::pole3())); }), Errc::NotTwoSimplePoles);
}

TEST(Io, DatumRoundTrip) {
  Datum x = fixtures::pole3();
  std::vector<Cx> z{Cx(1, Rational(1, 2)), Cx(Rational(3, 2), -2), Cx(7, 0), Cx(1, Rational(-5, 3))};
  DatumFile f = parse_datum(datum_to_json(x, z).dump());
  EXPECT_EQ(f.datum, x);
  ASSERT_EQ(f.zeta.size(), z.size());
  for (size_t i = 0; i < z.size(); ++i) EXPECT_TRUE(f.zeta[i] == z[i]);
  EXPECT_THROW(parse_datum("{\"n\": 1, \"zeta\": [[1, 0.5]]}"), Error);
  EXPECT_THROW(parse_datum("{not json"), Error);
  DatumFile g = parse_datum("{\"n\":0,\"nplus\":[0,0],\"nminus\":[0,0],\"d_breaks\":[0,1]}");
  EXPECT_EQ(stratum_of(assemble(g.datum, g.zeta)), Signature({0}, {2}));
}

TEST(Property, EulerResidueAndAngles) {
  std::mt19937_64 rng(20240611);
  int assembled = 0, attempts = 0;
  while (assembled < 1000 && attempts < 20000) {
    ++attempts;
    Layout L = fixtures::random_layout(rng);
    Datum x = datum_of(L);
    if (!validate_datum(x).empty()) continue;
    auto zeta = fixtures::random_zeta(rng, x.n);
    Surface S;
    try {
      S = assemble(x, zeta);
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), Errc::Disconnected) << e.what();
      continue;
    }
    ++assembled;
    const Signature sig = stratum_of(S);
    const int g = genus(sig);
    const int r = S.complex.num_vertices();
    const int s = static_cast<int>(S.poles.size());
    EXPECT_EQ(x.n, 2 * g + r + s - 2);
    EXPECT_EQ(surface_genus(S), g);
    Cx total(0, 0);
    for (const auto& p : S.poles) {
      total = total + p.residue;
      if (p.order == 1) EXPECT_FALSE(p.residue.is_zero());
    }
    EXPECT_TRUE(total.is_zero());
    for (const auto& v : S.complex.vertices) {
      EXPECT_GE(v.degree, 0);
      EXPECT_NEAR(v.total, 2 * kPi * (v.degree + 1), 1e-9 * (v.degree + 1));
    }
    std::vector<std::pair<int, std::string>> got;
    for (const auto& p : S.poles) got.emplace_back(p.order, to_string(p.residue));
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, layout_poles(L, zeta));
    EXPECT_EQ(layout_of(x), L);
  }
  EXPECT_EQ(assembled, 1000);
}
