#pragma once

#include <string>
#include <vector>

#include "polestrata/surface.hpp"

namespace polestrata {

// Closed translation surface given by one polygon with sides identified by translation.
struct CompactSurface {
  std::vector<Cx> polygon;  // counterclockwise vertices
  Patch patch;
  FlatComplex complex;
  Rational twist, height;
};

namespace detail {

inline int orient(const Cx& a, const Cx& b, const Cx& c) {
  Rational v = cross(b - a, c - a);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

inline bool on_segment(const Cx& a, const Cx& b, const Cx& p) {
  return orient(a, b, p) == 0 && std::min(a.re, b.re) <= p.re && p.re <= std::max(a.re, b.re) &&
         std::min(a.im, b.im) <= p.im && p.im <= std::max(a.im, b.im);
}

inline bool segments_meet(const Cx& a, const Cx& b, const Cx& c, const Cx& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4 && o1 && o2 && o3 && o4) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

inline bool polygon_is_simple(const std::vector<Cx>& P) {
  const size_t m = P.size();
  Rational area2 = 0;
  for (size_t i = 0; i < m; ++i) area2 += cross(P[i], P[(i + 1) % m]);
  if (area2 <= 0) return false;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      const Cx &a = P[i], &b = P[(i + 1) % m], &c = P[j], &d = P[(j + 1) % m];
      bool adjacent = j == i + 1 || (i == 0 && j == m - 1);
      if (!adjacent) {
        if (segments_meet(a, b, c, d)) return false;
      } else {
        // Adjacent sides may only share their common vertex.
        const Cx& shared = (j == i + 1) ? b : a;
        const Cx& far1 = (j == i + 1) ? a : b;
        const Cx& far2 = (j == i + 1) ? d : c;
        if (orient(far1, shared, far2) == 0 && dot(far1 - shared, far2 - shared) > 0) return false;
      }
    }
  return true;
}

}  // namespace detail

// Cuts both half-cylinders along their closed geodesic and glues the two circles.
inline CompactSurface close_two_simple_poles(const Surface& S, const Rational& twist = 0) {
  if (S.poles.size() != 2 || S.poles[0].order != 1 || S.poles[1].order != 1)
    throw Error(Errc::NotTwoSimplePoles, "surface has " + std::to_string(S.poles.size()) + " poles");
  const Layout L = layout_of(S.datum);
  if (!L.chains.empty() || L.cplus.size() != 1 || L.cminus.size() != 1)
    throw Error(Errc::Internal, "two simple poles without the two-cylinder layout");
  const auto& top = L.cplus[0];
  const auto& bot = L.cminus[0];
  const int n = S.datum.n;
  const int k = static_cast<int>(top.size());
  const int cedge = n;

  CompactSurface C;
  C.twist = twist;
  for (Rational H = 1;; H *= 2) {
    Cx c(twist, H);
    std::vector<Cx> P{Cx(0, 0)};
    for (int l : top) P.push_back(P.back() + S.zeta[l - 1]);
    std::vector<Cx> upper{c};
    for (int l : bot) upper.push_back(upper.back() + S.zeta[l - 1]);
    for (int i = k; i >= 1; --i) P.push_back(upper[i]);
    // upper[0] == c closes the polygon back to 0.
    P.push_back(upper[0]);
    if (detail::polygon_is_simple(P)) {
      C.polygon = P;
      C.height = H;
      break;
    }
    if (H > Rational(1 << 30)) throw Error(Errc::Internal, "no simple closing polygon");
  }
  const Cx c(twist, C.height);
  // Sides: k bottom, right, k top (reversed), left.
  Patch& Pt = C.patch;
  Pt.cyclic = true;
  Pt.region_left = true;
  for (int l : top) Pt.pieces.push_back(Piece{S.zeta[l - 1], l - 1, false});
  Pt.pieces.push_back(Piece{c, cedge, false});
  for (int i = k - 1; i >= 0; --i) Pt.pieces.push_back(Piece{-S.zeta[bot[i] - 1], bot[i] - 1, true});
  Pt.pieces.push_back(Piece{-c, cedge, true});
  const int m = static_cast<int>(Pt.pieces.size());
  std::vector<int> first(n + 1, -1);
  for (int i = 0; i < m; ++i) {
    int e = Pt.pieces[i].edge;
    if (first[e] < 0) {
      first[e] = i;
      continue;
    }
    Piece& a = Pt.pieces[first[e]];
    Piece& b = Pt.pieces[i];
    a.partner_patch = b.partner_patch = 0;
    a.partner_piece = i;
    b.partner_piece = first[e];
    a.flipped = b.flipped = true;
  }
  std::vector<Cx> hol = S.zeta;
  hol.push_back(c);
  C.complex = build_complex({Pt}, hol);
  C.complex.faces.assign(1, std::vector<long long>(n + 1, 0));
  return C;
}

inline std::vector<int> compact_degrees(const CompactSurface& C) {
  std::vector<int> out;
  for (const auto& v : C.complex.vertices) out.push_back(v.degree);
  std::sort(out.begin(), out.end());
  return out;
}

inline int compact_genus(const CompactSurface& C) {
  const int E = C.complex.num_edges(), V = C.complex.num_vertices();
  const int twice = E - V + 1;
  int deg = 0;
  for (const auto& v : C.complex.vertices) deg += v.degree;
  if (twice % 2 || deg != twice - 2) throw Error(Errc::EulerMismatch, "closed surface angle count");
  return twice / 2;
}

}  // namespace polestrata
