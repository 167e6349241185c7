#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "polestrata/homology.hpp"

using namespace polestrata;

namespace {

void expect_standard(const FlatComplex& fc, const SymplecticBasis& B) {
  const size_t g = B.pairs.size();
  for (size_t i = 0; i < g; ++i)
    for (size_t j = 0; j < g; ++j) {
      const auto& [ai, bi] = B.pairs[i];
      const auto& [aj, bj] = B.pairs[j];
      EXPECT_EQ(intersection(fc, ai, bj), i == j ? 1 : 0);
      EXPECT_EQ(intersection(fc, bj, ai), i == j ? -1 : 0);
      EXPECT_EQ(intersection(fc, ai, aj), 0);
      EXPECT_EQ(intersection(fc, bi, bj), 0);
    }
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}

}  // namespace

TEST(CellComplex, Counts) {
  auto c = cell_counts(assemble(fixtures::pole3()));
  EXPECT_EQ(c.V, 1);
  EXPECT_EQ(c.E, 4);
  EXPECT_EQ(c.F, 1);
  EXPECT_EQ(c.euler(), -2);
  c = cell_counts(assemble(fixtures::plane()));
  EXPECT_EQ(c.V, 1);
  EXPECT_EQ(c.E, 0);
  EXPECT_EQ(c.F, 1);
  EXPECT_EQ(c.euler(), 2);
  c = cell_counts(assemble(fixtures::two_poles()));
  EXPECT_EQ(c.V, 2);
  EXPECT_EQ(c.E, 4);
  EXPECT_EQ(c.F, 2);
}

TEST(Intersection, VertexOrderOnTwoPoles) {
  Surface S = assemble(fixtures::two_poles());
  const auto& fc = S.complex;
  // Brute force: the pairing of closed chains is antisymmetric and bilinear.
  TreeCycles T = fundamental_cycles(fc, 3);
  for (const auto& a : T.cycles)
    for (const auto& b : T.cycles) {
      EXPECT_EQ(intersection(fc, a, b), -intersection(fc, b, a));
      Cycle s(a.size());
      for (size_t e = 0; e < a.size(); ++e) s[e] = a[e] + b[e];
      for (const auto& c : T.cycles) EXPECT_EQ(intersection(fc, s, c), intersection(fc, a, c) + intersection(fc, b, c));
    }
  auto B = symplectic_basis(S);
  ASSERT_EQ(B.pairs.size(), 1u);
  EXPECT_EQ(intersection(fc, B.pairs[0].first, B.pairs[0].second), 1);
}

TEST(SymplecticBasis, PoleThreeHasTwoPairs) {
  Surface S = assemble(fixtures::pole3());
  auto B = symplectic_basis(S);
  ASSERT_EQ(B.pairs.size(), 2u);
  expect_standard(S.complex, B);
}

TEST(SymplecticBasis, PlaneIsGenusZero) {
  EXPECT_EQ(code_of([] { symplectic_basis(assemble(fixtures::plane())); }), Errc::GenusZero);
}

TEST(SymplecticBasis, RandomSurfacesAreStandard) {
  std::mt19937_64 rng(11);
  int done = 0;
  for (int it = 0; it < 3000 && done < 150; ++it) {
    Datum x = datum_of(fixtures::random_layout(rng));
    if (!validate_datum(x).empty()) continue;
    Surface S;
    try {
      S = assemble(x, fixtures::random_zeta(rng, x.n));
    } catch (const Error&) {
      continue;
    }
    const int g = surface_genus(S);
    if (g == 0) continue;
    ++done;
    for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
      auto B = symplectic_basis(S, seed);
      ASSERT_EQ(static_cast<int>(B.pairs.size()), g);
      expect_standard(S.complex, B);
      for (const auto& [a, b] : B.pairs) {
        EXPECT_TRUE(is_closed(S.complex, a));
        EXPECT_TRUE(is_closed(S.complex, b));
      }
    }
  }
  EXPECT_GE(done, 100);
}

// The chain u + w is the cylinder waist (a closed geodesic, index 0) pushed across the zero of degree n.
TEST(CurveIndex, WaistChainAndCrossingCurve) {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 4}, {3, 6}, {2, 6}, {4, 6}, {3, 5}}) {
    auto F = bubbled_torus(k, {n});
    Surface S = assemble(F.datum, F.zeta);
    Cycle waist(S.complex.num_edges(), 0);
    waist[F.u_label - 1] = 1;
    waist[F.w_label - 1] = 1;
    const long long left = curve_index(S, waist);
    const long long right = curve_index(S, waist, Pushoff{Side::Right, {}});
    EXPECT_EQ(std::llabs(left), n);
    EXPECT_EQ(left, -right);
    auto B = symplectic_basis(S);
    long long best = 0;
    for (const auto& [a, b] : B.pairs)
      for (const Cycle* c : {&a, &b}) best = gcd_ll(best, class_index(S.complex, B, *c, {}));
    EXPECT_EQ(std::gcd(best, static_cast<long long>(n)), std::gcd(k, n)) << k << " " << n;
  }
}

TEST(CurveIndex, NotClosedAndNotSimple) {
  Surface S = assemble(fixtures::pole3());
  EXPECT_NO_THROW(curve_index(S, Cycle{1, 0, 0, 0}));
  Surface T = assemble(fixtures::two_poles());
  ASSERT_NE(T.complex.src[1], T.complex.dst[1]);
  EXPECT_EQ(code_of([&] { curve_index(T, Cycle{0, 1, 0, 0}); }), Errc::NotClosed);
  Cycle twice{2, 0, 0, 0};
  EXPECT_EQ(code_of([&] { curve_index(S, twice); }), Errc::NotSimple);
}

TEST(Property, CrossingAZeroShiftsIndexByItsDegree) {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int it = 0; it < 20000 && checked < 300; ++it) {
    auto s = oracles::random_crossing(rng);
    if (!s) continue;
    ++checked;
    const long long d = s->index_after - s->index_before;
    EXPECT_TRUE(d == s->degree || d == -s->degree) << d << " vs degree " << s->degree;
  }
  EXPECT_EQ(checked, 300);
}

TEST(Rotation, BubbledToriMatchGcd) {
  for (int n = 2; n <= 8; ++n)
    for (const auto& poles : oracles::partitions(n))
      for (int k = 1; k < n; ++k) {
        auto F = bubbled_torus(k, poles);
        Surface S = assemble(F.datum, F.zeta);
        long long want = k;
        for (int p : poles) want = gcd_ll(want, p);
        EXPECT_EQ(rotation_number(S), want);
        EXPECT_EQ(rotation_number(S, 17, Pushoff{Side::Right, {}}), want);
      }
}

TEST(Rotation, TwoSimplePolesIsOne) {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 10; ++it) {
    auto F = bubbled_torus(1, {1, 1});
    Surface S = assemble(F.datum, fixtures::random_zeta(rng, F.datum.n));
    EXPECT_EQ(rotation_number(S, rng()), 1);
  }
  EXPECT_EQ(code_of([] { rotation_number(assemble(fixtures::pole3())); }), Errc::NotGenusOne);
}

TEST(Spin, H4m2BubblesHaveOppositeParity) {
  Surface a = assemble(realize_bubbles({2}, {1, 1}));
  Surface b = assemble(realize_bubbles({2}, {1, 2}));
  Surface c = assemble(realize_bubbles({2}, {1, 3}));
  ASSERT_EQ(stratum_of(a), Signature({4}, {2}));
  EXPECT_NE(spin_parity(a), spin_parity(b));
  EXPECT_EQ(spin_parity(a), spin_parity(c));
}

TEST(Spin, TwoSimplePolesAgreesWithClosing) {
  Surface S = assemble(realize_bubbles({1, 1}, {1, 3}));
  const int p = spin_parity(S);
  for (Rational tw : {Rational(0), Rational(1, 2), Rational(-3, 7)}) {
    CompactSurface C = close_two_simple_poles(S, tw);
    EXPECT_EQ(spin_parity(C, 0), p);
    EXPECT_EQ(spin_parity(C, 5), p);
  }
}

TEST(Spin, QuadraticFormMatchesTreeExtension) {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 30; ++it) {
    Surface S = oracles::random_even_surface(rng);
    if (stratum_of(S).poles == std::vector<int>{1, 1}) continue;
    TreeCycles T = fundamental_cycles(S.complex, rng());
    auto B = symplectic_basis(S, rng());
    for (const auto& [a, b] : B.pairs) {
      EXPECT_EQ(spin_form(S.complex, a), spin_form_via_tree(S.complex, T, a));
      EXPECT_EQ(spin_form(S.complex, b), spin_form_via_tree(S.complex, T, b));
    }
  }
}

TEST(Spin, UndefinedOutsideEvenType) {
  EXPECT_EQ(code_of([] { spin_parity(assemble(fixtures::pole3())); }), Errc::SpinUndefined);
}

TEST(Property, SpinIsBasisIndependent) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 50; ++it) {
    Surface S = oracles::random_even_surface(rng);
    const int p = spin_parity(S, 0);
    EXPECT_EQ(spin_parity(S, 1000 + it), p);
    EXPECT_EQ(spin_parity(S, rng()), p);
  }
}

TEST(Involution, Examples) {
  EXPECT_TRUE(has_zippered_involution(parallelogram_datum()));
  EXPECT_FALSE(has_zippered_involution(fixtures::pole3()));
  // D_0: top 1 2 / bottom 4 3, D_1: top 3 4 / bottom 2 1, as two chains.
  Datum x;
  x.n = 4;
  x.pi_t = {1, 2, 3, 4};
  x.pi_b = {4, 3, 2, 1};
  x.nplus = {0, 2, 4};
  x.nminus = {0, 2, 4};
  x.d_breaks = {0, 1, 2};
  Surface S = assemble(x);
  EXPECT_TRUE(has_zippered_involution(x));
  EXPECT_TRUE(is_hyperelliptic_type(stratum_of(S)));
}

TEST(Property, InvolutionImpliesHyperellipticType) {
  std::mt19937_64 rng(17);
  int positives = 0;
  for (int it = 0; it < 3000; ++it) {
    Datum x = datum_of(fixtures::random_layout(rng, 5));
    if (!validate_datum(x).empty()) continue;
    Surface S;
    try {
      S = assemble(x);
    } catch (const Error&) {
      continue;
    }
    if (!has_zippered_involution(x)) continue;
    ++positives;
    Signature sig = stratum_of(S);
    std::vector<int> z;
    for (int d : sig.zeros)
      if (d > 0) z.push_back(d);
    if (z.empty()) continue;
    EXPECT_TRUE(is_hyperelliptic_type(Signature(z, sig.poles))) << to_string(sig);
  }
  EXPECT_GT(positives, 5);
}
