#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "polestrata/error.hpp"
#include "polestrata/exact.hpp"

namespace polestrata {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kAngleTol = 1e-9;

// A boundary piece of a patch, oriented along the boundary walk.
struct Piece {
  Cx dir;
  int edge = -1;  // saddle-connection edge carried by the piece, or -1
  bool edge_rev = false;  // piece runs against the edge orientation
  int partner_patch = -1;
  int partner_piece = -1;
  bool flipped = false;  // partner's endpoints are reversed
};

// A planar region bounded by a chain of pieces; corner j sits between piece j and piece j+1.
struct Patch {
  bool region_left = true;
  bool cyclic = false;
  std::vector<Piece> pieces;

  int corners() const { return cyclic ? static_cast<int>(pieces.size()) : static_cast<int>(pieces.size()) - 1; }
  int out_piece(int corner) const { return cyclic ? (corner + 1) % static_cast<int>(pieces.size()) : corner + 1; }
  double corner_angle(int corner) const {
    double t = turn(pieces[corner].dir, pieces[out_piece(corner)].dir);
    return region_left ? kPi - t : kPi + t;
  }
};

struct HalfEdge {
  int edge;
  bool at_start;
  bool operator==(const HalfEdge& o) const { return edge == o.edge && at_start == o.at_start; }
};

struct CornerRef {
  int patch;
  int corner;
};

struct VertexStar {
  std::vector<CornerRef> corners;  // counterclockwise
  std::vector<HalfEdge> ccw;       // half-edges in counterclockwise order
  std::vector<double> pos;         // angular position of each half-edge
  double total = 0;
  int degree = 0;
};

// Edge graph of a flat surface with the cyclic structure at each vertex.
struct FlatComplex {
  std::vector<Cx> hol;
  std::vector<int> src, dst;
  std::vector<VertexStar> vertices;
  std::vector<std::vector<int>> corner_vertex;  // [patch][corner]
  std::vector<std::vector<long long>> faces;                 // boundary chains

  int num_edges() const { return static_cast<int>(hol.size()); }
  int num_vertices() const { return static_cast<int>(vertices.size()); }
};

// Walks every vertex class counterclockwise and fills the complex.
inline FlatComplex build_complex(const std::vector<Patch>& patches, const std::vector<Cx>& hol) {
  FlatComplex fc;
  fc.hol = hol;
  const int ne = static_cast<int>(hol.size());
  fc.src.assign(ne, -1);
  fc.dst.assign(ne, -1);
  fc.corner_vertex.resize(patches.size());
  for (size_t p = 0; p < patches.size(); ++p) fc.corner_vertex[p].assign(patches[p].corners(), -1);

  for (size_t p0 = 0; p0 < patches.size(); ++p0) {
    for (int c0 = 0; c0 < patches[p0].corners(); ++c0) {
      if (fc.corner_vertex[p0][c0] >= 0) continue;
      const int v = fc.num_vertices();
      VertexStar star;
      int p = static_cast<int>(p0), c = c0;
      size_t guard = 0;
      do {
        if (++guard > 100000) throw Error(Errc::Internal, "vertex walk does not close");
        const Patch& P = patches[p];
        if (fc.corner_vertex[p][c] >= 0) throw Error(Errc::Internal, "corner visited twice");
        fc.corner_vertex[p][c] = v;
        star.corners.push_back({p, c});
        star.total += P.corner_angle(c);
        int exit = P.region_left ? c : P.out_piece(c);
        bool at_end = P.region_left;
        const Piece& pc = P.pieces[exit];
        if (pc.edge >= 0) {
          star.ccw.push_back({pc.edge, at_end == pc.edge_rev});
          star.pos.push_back(star.total);
        }
        if (pc.partner_patch < 0) throw Error(Errc::Internal, "unglued piece");
        const Patch& Q = patches[pc.partner_patch];
        bool arrive_end = at_end != pc.flipped;
        int e = pc.partner_piece;
        int nc;
        if (arrive_end) {
          if (Q.region_left) throw Error(Errc::Internal, "inconsistent orientation at gluing");
          nc = e;
        } else {
          if (!Q.region_left) throw Error(Errc::Internal, "inconsistent orientation at gluing");
          nc = Q.cyclic ? (e - 1 + static_cast<int>(Q.pieces.size())) % static_cast<int>(Q.pieces.size()) : e - 1;
        }
        if (nc < 0 || nc >= Q.corners()) throw Error(Errc::Internal, "gluing reaches a point at infinity");
        p = pc.partner_patch;
        c = nc;
      } while (!(p == static_cast<int>(p0) && c == c0));
      double turns = star.total / (2 * kPi);
      long long k = std::llround(turns);
      if (std::fabs(turns - static_cast<double>(k)) > kAngleTol * static_cast<double>(star.corners.size()) || k < 1)
        throw Error(Errc::AngleNotMultipleOf2Pi, "cone angle " + std::to_string(star.total));
      star.degree = static_cast<int>(k - 1);
      for (const HalfEdge& h : star.ccw) (h.at_start ? fc.src : fc.dst)[h.edge] = v;
      fc.vertices.push_back(std::move(star));
    }
  }
  for (int e = 0; e < ne; ++e)
    if (fc.src[e] < 0 || fc.dst[e] < 0) throw Error(Errc::Internal, "edge without endpoints");
  return fc;
}

// Net flow of a chain at each half-edge: +c leaving along an edge, -c arriving.
inline long long flow_at(const std::vector<long long>& chain, const HalfEdge& h) {
  return h.at_start ? chain[h.edge] : -chain[h.edge];
}

inline bool is_closed(const FlatComplex& fc, const std::vector<long long>& chain) {
  if (static_cast<int>(chain.size()) != fc.num_edges()) return false;
  for (const VertexStar& v : fc.vertices) {
    long long s = 0;
    for (const HalfEdge& h : v.ccw) s += flow_at(chain, h);
    if (s != 0) return false;
  }
  return true;
}

// Algebraic intersection of closed chains: A is pushed off to the left of its edges and
// rerouted near each vertex through the sector after the first half-edge.
inline long long intersection(const FlatComplex& fc, const std::vector<long long>& a, const std::vector<long long>& b) {
  long long total = 0;
  for (const VertexStar& v : fc.vertices) {
    long long cum = 0;
    for (const HalfEdge& h : v.ccw) {
      long long fb = flow_at(b, h);
      cum += fb;
      long long fa = flow_at(a, h);
      if (fa == 0) continue;
      total += fa * (-cum + (h.at_start ? 0 : fb));
    }
  }
  return total;
}

}  // namespace polestrata
