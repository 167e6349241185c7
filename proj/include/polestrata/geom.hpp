#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <thread>
#include <tuple>
#include <vector>

#include "polestrata/surface.hpp"

namespace polestrata {

struct SaddleConnection {
  int start = -1, end = -1;  // vertex ids
  Cx holonomy;
  std::vector<std::pair<int, int>> crossings;  // (domain, boundary piece) in order
  double start_pos = 0;  // angular position of the outgoing direction at start
  double end_pos = 0;    // angular position of the returning direction at end

  Rational length2() const { return holonomy.norm2(); }
};

struct Cylinder {
  Cx waist;
  std::vector<int> bottom;  // saddle connections with the cylinder on their left
  std::vector<int> top;     // saddle connections with the cylinder on their right
  Rational height2;         // squared height
};

struct CensusOptions {
  Rational bound = 10;
  Cx rotation{1, 0};  // exact unit complex number applied to the developed cells
  int threads = 1;
};

namespace detail {

struct CellSide {
  Cx a, u;
  bool ray = false;
  int piece = -1;  // boundary piece of the domain, -1 for an internal cut
  int to_cell = -1, to_side = -1;
  Cx shift;  // developed offset change when crossing
  std::tuple<int, int, int> key, partner_key;
};

struct CellCorner {
  Cx at;
  Cx lo, hi;  // open window, counterclockwise from lo to hi
  int vertex = -1;
  double pos_lo = 0;
};

struct Cell {
  int domain;
  std::vector<CellSide> sides;
  std::vector<CellCorner> corners;
};

struct CellMap {
  std::vector<Cell> cells;
  std::vector<double> total;  // cone angle per vertex
  std::vector<std::vector<double>> corner_start;  // [patch][corner]
  std::vector<std::vector<Cx>> corner_ray;        // start ray of each patch corner
};

inline double ccw_angle(const Cx& from, const Cx& to) {
  double t = turn(from, to);
  return t < 0 ? t + 2 * kPi : t;
}

inline double mod_pos(double x, double total) {
  double r = std::fmod(x, total);
  return r < 0 ? r + total : r;
}

inline CellMap build_cells(const Surface& S, const Cx& rot) {
  CellMap M;
  const FlatComplex& fc = S.complex;
  M.total.resize(fc.num_vertices());
  M.corner_start.resize(S.patches.size());
  M.corner_ray.resize(S.patches.size());
  for (size_t p = 0; p < S.patches.size(); ++p) {
    const Patch& P = S.patches[p];
    M.corner_start[p].assign(P.corners(), 0);
    M.corner_ray[p].resize(P.corners());
    for (int c = 0; c < P.corners(); ++c)
      M.corner_ray[p][c] = P.region_left ? P.pieces[P.out_piece(c)].dir : -P.pieces[c].dir;
  }
  for (int v = 0; v < fc.num_vertices(); ++v) {
    double cum = 0;
    for (const CornerRef& cr : fc.vertices[v].corners) {
      M.corner_start[cr.patch][cr.corner] = cum;
      cum += S.patches[cr.patch].corner_angle(cr.corner);
    }
    M.total[v] = cum;
  }

  for (size_t d = 0; d < S.domains.size(); ++d) {
    const Domain& D = S.domains[d];
    const int k = static_cast<int>(D.labels.size());
    const bool plus = is_plus(D.kind);
    const bool cyl = is_cyl(D.kind);
    const Cx up = plus ? Cx(0, 1) : Cx(0, -1);
    const Cx left(-1, 0), right(1, 0);
    const auto& V = D.verts;
    const int dd = static_cast<int>(d);
    auto corner = [&](int j, Cx lo, Cx hi) {
      CellCorner c;
      c.at = V[j];
      c.lo = lo;
      c.hi = hi;
      c.vertex = fc.corner_vertex[d][j];
      c.pos_lo = M.corner_start[d][j] + ccw_angle(M.corner_ray[d][j], lo);
      return c;
    };
    auto cut = [&](int j) {
      CellSide s;
      s.a = V[j];
      s.u = up;
      s.ray = true;
      s.key = s.partner_key = {0, dd, j};
      return s;
    };
    auto piece_side = [&](int piece, Cx a, Cx u, bool ray) {
      CellSide s;
      s.a = a;
      s.u = u;
      s.ray = ray;
      s.piece = piece;
      const Piece& pc = S.patches[d].pieces[piece];
      s.key = {1, dd, piece};
      s.partner_key = {1, pc.partner_patch, pc.partner_piece};
      return s;
    };
    if (!cyl) {
      Cell q{dd, {}, {}};
      q.sides.push_back(piece_side(0, V[0], left, true));
      q.sides.push_back(cut(0));
      q.corners.push_back(plus ? corner(0, up, left) : corner(0, left, up));
      M.cells.push_back(q);
    }
    for (int j = 1; j <= k; ++j) {
      Cell c{dd, {}, {}};
      const Cx z = V[j] - V[j - 1];
      c.sides.push_back(cyl && j == 1 ? piece_side(0, V[0], up, true) : cut(j - 1));
      c.sides.push_back(piece_side(j, V[j - 1], z, false));
      c.sides.push_back(cyl && j == k ? piece_side(k + 1, V[k], up, true) : cut(j));
      if (plus) {
        c.corners.push_back(corner(j - 1, z, up));
        c.corners.push_back(corner(j, up, -z));
      } else {
        c.corners.push_back(corner(j - 1, up, z));
        c.corners.push_back(corner(j, -z, up));
      }
      M.cells.push_back(c);
    }
    if (!cyl) {
      Cell q{dd, {}, {}};
      q.sides.push_back(cut(k));
      q.sides.push_back(piece_side(k + 1, V[k], right, true));
      q.corners.push_back(plus ? corner(k, right, up) : corner(k, up, right));
      M.cells.push_back(q);
    }
  }

  // Pair every side with its counterpart and record the translation.
  std::map<std::tuple<int, int, int>, std::vector<std::pair<int, int>>> by_key;
  for (size_t c = 0; c < M.cells.size(); ++c)
    for (size_t s = 0; s < M.cells[c].sides.size(); ++s)
      by_key[M.cells[c].sides[s].key].push_back({static_cast<int>(c), static_cast<int>(s)});
  for (size_t c = 0; c < M.cells.size(); ++c)
    for (size_t s = 0; s < M.cells[c].sides.size(); ++s) {
      CellSide& side = M.cells[c].sides[s];
      for (auto [c2, s2] : by_key.at(side.partner_key)) {
        if (c2 == static_cast<int>(c) && s2 == static_cast<int>(s)) continue;
        side.to_cell = c2;
        side.to_side = s2;
      }
      if (side.to_cell < 0) throw Error(Errc::Internal, "unmatched cell side");
      side.shift = side.a - M.cells[side.to_cell].sides[side.to_side].a;
    }

  for (Cell& c : M.cells) {
    for (CellSide& s : c.sides) {
      s.a = s.a * rot;
      s.u = s.u * rot;
      s.shift = s.shift * rot;
    }
    for (CellCorner& k : c.corners) {
      k.at = k.at * rot;
      k.lo = k.lo * rot;
      k.hi = k.hi * rot;
    }
  }
  return M;
}

inline bool inside_open(const Cx& lo, const Cx& hi, const Cx& d) { return cross(lo, d) > 0 && cross(d, hi) > 0; }
inline bool inside_closed(const Cx& lo, const Cx& hi, const Cx& d) {
  return cross(lo, d) >= 0 && cross(d, hi) >= 0;
}

// Intersection of two open cones narrower than a half-turn.
inline std::optional<std::pair<Cx, Cx>> meet(const Cx& lo1, const Cx& hi1, const Cx& lo2, const Cx& hi2) {
  const Cx* lo = inside_closed(lo2, hi2, lo1) ? &lo1 : (inside_closed(lo1, hi1, lo2) ? &lo2 : nullptr);
  const Cx* hi = inside_closed(lo2, hi2, hi1) ? &hi1 : (inside_closed(lo1, hi1, hi2) ? &hi2 : nullptr);
  if (!lo || !hi || cross(*lo, *hi) <= 0) return std::nullopt;
  return std::make_pair(*lo, *hi);
}

inline Rational dist2(const Cx& P, const Cx& A, const Cx& u, bool ray) {
  Cx w = P - A;
  Rational t = dot(w, u) / u.norm2();
  if (t < 0) t = 0;
  if (!ray && t > 1) t = 1;
  return (w - u * t).norm2();
}

struct Tracer {
  const CellMap& M;
  Rational L2;
  int src;
  Cx P;
  const CellCorner* start;
  std::vector<SaddleConnection>& out;
  std::vector<std::pair<int, int>> path;

  void explore(int ci, const Cx& T, const Cx& lo, const Cx& hi, int entry) {
    const Cell& cell = M.cells[ci];
    for (const CellCorner& k : cell.corners) {
      const Cx Q = T + k.at;
      if (Q == P) continue;
      const Cx d = Q - P;
      if (!inside_open(lo, hi, d) || d.norm2() > L2) continue;
      SaddleConnection sc;
      sc.start = src;
      sc.end = k.vertex;
      sc.holonomy = d;
      sc.crossings = path;
      sc.start_pos = start->pos_lo + ccw_angle(start->lo, d);
      sc.end_pos = k.pos_lo + ccw_angle(k.lo, -d);
      out.push_back(std::move(sc));
    }
    for (int si = 0; si < static_cast<int>(cell.sides.size()); ++si) {
      if (si == entry) continue;
      const CellSide& s = cell.sides[si];
      const Cx A = T + s.a;
      const Cx v1 = A - P;
      const Cx v2 = s.ray ? s.u : A + s.u - P;
      const Rational c = cross(v1, v2);
      if (c == 0) continue;
      auto w = c > 0 ? meet(lo, hi, v1, v2) : meet(lo, hi, v2, v1);
      if (!w) continue;
      if (dist2(P, A, s.u, s.ray) > L2) continue;
      if (s.piece >= 0) path.push_back({cell.domain, s.piece});
      explore(s.to_cell, T + s.shift, w->first, w->second, s.to_side);
      if (s.piece >= 0) path.pop_back();
    }
  }
};

struct Seed {
  int cell, corner;
  Cx lo, hi;
};

inline bool positive(const Cx& h) { return h.re > 0 || (h.re == 0 && h.im > 0); }

inline bool census_less(const SaddleConnection& a, const SaddleConnection& b) {
  Rational la = a.length2(), lb = b.length2();
  if (la != lb) return la < lb;
  if (a.crossings != b.crossings) return a.crossings < b.crossings;
  if (a.start != b.start) return a.start < b.start;
  if (a.end != b.end) return a.end < b.end;
  if (!(a.holonomy == b.holonomy)) return a.holonomy < b.holonomy;
  return a.start_pos < b.start_pos;
}

inline std::vector<SaddleConnection> trace_seeds(const CellMap& M, const std::vector<Seed>& seeds, const Rational& L2,
                                                 int threads) {
  unsigned hc = std::thread::hardware_concurrency();
  if (threads <= 0) threads = hc ? static_cast<int>(hc) : 1;
  threads = std::max(1, std::min<int>(threads, static_cast<int>(seeds.size())));
  std::vector<std::vector<SaddleConnection>> local(threads);
  auto work = [&](int w) {
    for (size_t i = w; i < seeds.size(); i += threads) {
      const Seed& sd = seeds[i];
      const CellCorner& k = M.cells[sd.cell].corners[sd.corner];
      Tracer t{M, L2, k.vertex, k.at, &k, local[w], {}};
      t.explore(sd.cell, Cx(0, 0), sd.lo, sd.hi, -1);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  std::vector<SaddleConnection> all;
  for (auto& l : local)
    for (auto& sc : l) all.push_back(std::move(sc));
  return all;
}

}  // namespace detail

// All saddle connections of length <= bound, each once with positively oriented holonomy.
inline std::vector<SaddleConnection> saddle_connections(const Surface& S, const CensusOptions& opt = {}) {
  if (opt.bound <= 0) throw Error(Errc::OutOfRange, "length bound must be positive");
  if (opt.rotation.norm2() != 1) throw Error(Errc::OutOfRange, "rotation must be a unit complex number");
  const Rational L2 = opt.bound * opt.bound;
  detail::CellMap M = detail::build_cells(S, opt.rotation);
  std::vector<detail::Seed> seeds;
  for (size_t c = 0; c < M.cells.size(); ++c)
    for (size_t k = 0; k < M.cells[c].corners.size(); ++k)
      seeds.push_back({static_cast<int>(c), static_cast<int>(k), M.cells[c].corners[k].lo, M.cells[c].corners[k].hi});
  std::vector<SaddleConnection> out;
  for (auto& sc : detail::trace_seeds(M, seeds, L2, opt.threads))
    if (detail::positive(sc.holonomy)) out.push_back(std::move(sc));
  const FlatComplex& fc = S.complex;
  for (int e = 0; e < fc.num_edges(); ++e) {
    SaddleConnection sc;
    sc.holonomy = fc.hol[e] * opt.rotation;
    if (sc.holonomy.norm2() > L2) continue;
    sc.start = fc.src[e];
    sc.end = fc.dst[e];
    for (int end = 0; end < 2; ++end) {
      const VertexStar& V = fc.vertices[end == 0 ? sc.start : sc.end];
      for (size_t i = 0; i < V.ccw.size(); ++i)
        if (V.ccw[i] == HalfEdge{e, end == 0}) (end == 0 ? sc.start_pos : sc.end_pos) = V.pos[i];
    }
    if (!detail::positive(sc.holonomy)) {
      std::swap(sc.start, sc.end);
      std::swap(sc.start_pos, sc.end_pos);
      sc.holonomy = -sc.holonomy;
    }
    out.push_back(std::move(sc));
  }
  std::sort(out.begin(), out.end(), detail::census_less);
  return out;
}

inline std::vector<SaddleConnection> saddle_connections(const Surface& S, const Rational& bound) {
  CensusOptions o;
  o.bound = bound;
  return saddle_connections(S, o);
}

namespace detail {

inline bool near_pi(double x) { return std::fabs(x - kPi) < 1e-9; }

inline bool same_pos(double a, double b, double total) {
  double d = mod_pos(a - b, total);
  return std::min(d, total - d) < 1e-7;
}

// Chains of parallel connections turning by a straight angle on one side.
inline std::vector<std::vector<int>> straight_chains(const std::vector<SaddleConnection>& sc, const CellMap& M,
                                                     bool left) {
  const int m = static_cast<int>(sc.size());
  std::vector<int> next(m, -1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (sc[i].end != sc[j].start || cross(sc[i].holonomy, sc[j].holonomy) != 0) continue;
      double T = M.total[sc[i].end];
      double a = left ? sc[i].end_pos - sc[j].start_pos : sc[j].start_pos - sc[i].end_pos;
      if (near_pi(mod_pos(a, T))) next[i] = j;
    }
  std::vector<std::vector<int>> chains;
  std::vector<char> state(m, 0);
  for (int i = 0; i < m; ++i) {
    if (state[i]) continue;
    std::vector<int> walk;
    int j = i;
    while (j >= 0 && state[j] == 0) {
      state[j] = 1;
      walk.push_back(j);
      j = next[j];
    }
    if (j >= 0 && state[j] == 1) chains.emplace_back(std::find(walk.begin(), walk.end(), j), walk.end());
    for (int x : walk) state[x] = 2;
  }
  return chains;
}

}  // namespace detail

// Finite maximal cylinders whose waist is at most the bound.
inline std::vector<Cylinder> cylinders(const Surface& S, const CensusOptions& opt = {}) {
  const auto sc = saddle_connections(S, opt);
  const detail::CellMap M = detail::build_cells(S, opt.rotation);
  const Rational L2 = opt.bound * opt.bound;
  auto left_chains = detail::straight_chains(sc, M, true);
  auto right_chains = detail::straight_chains(sc, M, false);
  std::vector<int> right_of(sc.size(), -1);
  for (size_t r = 0; r < right_chains.size(); ++r)
    for (int i : right_chains[r]) right_of[i] = static_cast<int>(r);

  // Boundary of the half-infinite cylinder at each simple pole, as (vertex, position, direction).
  struct PoleMark {
    int vertex;
    double pos;
    Cx dir;
    bool on_left;
  };
  std::vector<PoleMark> marks;
  for (size_t d = 0; d < S.domains.size(); ++d) {
    const Domain& D = S.domains[d];
    if (!is_cyl(D.kind)) continue;
    const int k = static_cast<int>(D.labels.size());
    const Cx w = D.verts.back();
    std::vector<Rational> lev;
    for (int j = 0; j < k; ++j) lev.push_back(cross(w, D.verts[j]));
    const bool plus = is_plus(D.kind);
    Rational best = lev[0];
    for (auto& x : lev) best = plus ? std::max(best, x) : std::min(best, x);
    std::vector<int> J;
    for (int j = 0; j < k; ++j)
      if (lev[j] == best) J.push_back(j);
    const int j0 = J[0];
    const Cx dir = (J.size() > 1 ? D.verts[J[1]] : D.verts[j0] + w) - D.verts[j0];
    double pos = M.corner_start[d][j0] + detail::ccw_angle(M.corner_ray[d][j0], dir);
    const Cx rdir = dir * opt.rotation;
    // Upper pole ends sit on the left of the block direction, lower ones on the right.
    marks.push_back({S.complex.corner_vertex[d][j0], pos, rdir, plus == detail::positive(rdir)});
  }
  auto is_pole_chain = [&](const std::vector<int>& chain) {
    for (const auto& mk : marks) {
      if (!mk.on_left) continue;
      for (int i : chain) {
        const auto& s = sc[i];
        if (cross(s.holonomy, mk.dir) != 0) continue;
        double T = M.total[mk.vertex];
        if ((s.start == mk.vertex && detail::same_pos(s.start_pos, mk.pos, T)) ||
            (s.end == mk.vertex && detail::same_pos(s.end_pos, mk.pos, T)))
          return true;
      }
    }
    return false;
  };

  std::vector<Cylinder> out;
  for (const auto& chain : left_chains) {
    Cx waist(0, 0);
    for (int i : chain) waist += sc[i].holonomy;
    if (waist.norm2() > L2 || is_pole_chain(chain)) continue;
    Cylinder cy;
    cy.waist = waist;
    cy.bottom = chain;
    // Height: the least transverse displacement of a connection leaving the bottom into the cylinder.
    const SaddleConnection& g = sc[chain.front()];
    const int P = g.start;
    const Cx h = g.holonomy;
    const double T = M.total[P];
    std::vector<detail::Seed> seeds;
    for (size_t c = 0; c < M.cells.size(); ++c)
      for (size_t k = 0; k < M.cells[c].corners.size(); ++k) {
        const auto& cc = M.cells[c].corners[k];
        if (cc.vertex != P) continue;
        const double alpha = detail::ccw_angle(cc.lo, cc.hi);
        const double x = detail::mod_pos(cc.pos_lo - g.start_pos, T);
        Cx lo, hi;
        if (x < kPi) {
          lo = cc.lo;
          hi = x + alpha <= kPi ? cc.hi : -h;
        } else if (x + alpha > T) {
          lo = h;
          hi = x + alpha - T <= kPi ? cc.hi : -h;
        } else {
          continue;
        }
        if (cross(lo, hi) > 0) seeds.push_back({static_cast<int>(c), static_cast<int>(k), lo, hi});
      }
    Rational bound2 = L2;
    std::optional<Rational> best;
    std::vector<SaddleConnection> found;
    for (int round = 0; round < 64; ++round) {
      found.clear();
      best.reset();
      for (auto& s : detail::trace_seeds(M, seeds, bound2, 1)) {
        Rational c = cross(h, s.holonomy);
        if (c <= 0) continue;
        if (!best || c < *best) best = c;
        found.push_back(std::move(s));
      }
      if (best) {
        Rational need = h.norm2() + (*best) * (*best) / h.norm2();
        if (bound2 >= need) break;
        bound2 = need;
      } else {
        bound2 *= 4;
      }
    }
    if (!best) throw Error(Errc::Internal, "cylinder without an opposite boundary");
    cy.height2 = (*best) * (*best) / h.norm2();
    for (const auto& s : found) {
      if (cross(h, s.holonomy) != *best) continue;
      const double TQ = M.total[s.end];
      for (size_t j = 0; j < sc.size(); ++j) {
        if (sc[j].start != s.end || right_of[j] < 0 || cross(sc[j].holonomy, h) != 0) continue;
        double a = detail::mod_pos(sc[j].start_pos - s.end_pos, TQ);
        if (a > 1e-9 && a < kPi - 1e-9) {
          cy.top = right_chains[right_of[j]];
          break;
        }
      }
      if (!cy.top.empty()) break;
    }
    out.push_back(std::move(cy));
  }
  std::sort(out.begin(), out.end(), [](const Cylinder& a, const Cylinder& b) {
    Rational la = a.waist.norm2(), lb = b.waist.norm2();
    if (la != lb) return la < lb;
    return a.bottom < b.bottom;
  });
  return out;
}

inline std::vector<Cylinder> cylinders(const Surface& S, const Rational& bound) {
  CensusOptions o;
  o.bound = bound;
  return cylinders(S, o);
}

}  // namespace polestrata
