#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "polestrata/compact.hpp"
#include "polestrata/surface.hpp"

namespace polestrata {

using Cycle = std::vector<long long>;

struct SymplecticBasis {
  std::vector<std::pair<Cycle, Cycle>> pairs;
  std::vector<Cycle> radical;
};

struct CellCounts {
  int V, E, F;
  int euler() const { return V - E + F; }
};

inline CellCounts cell_counts(const Surface& S) {
  CellCounts c{S.complex.num_vertices(), S.complex.num_edges(), static_cast<int>(S.poles.size())};
  if (c.euler() != 2 - 2 * surface_genus(S)) throw Error(Errc::EulerMismatch, "cell complex");
  return c;
}

// Fundamental cycles of a spanning tree; the tree is grown in a seeded edge order.
struct TreeCycles {
  std::vector<int> tree_edges, cotree_edges;
  std::vector<Cycle> cycles;  // one per cotree edge, coefficient +1 on it
};

inline TreeCycles fundamental_cycles(const FlatComplex& fc, std::uint64_t seed = 0) {
  const int ne = fc.num_edges(), nv = fc.num_vertices();
  std::vector<int> order(ne);
  std::iota(order.begin(), order.end(), 0);
  int root = 0;
  if (seed) {
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    root = static_cast<int>(rng() % static_cast<std::uint64_t>(nv));
  }
  std::vector<int> parent_edge(nv, -2), parent(nv, -1), depth(nv, 0);
  parent_edge[root] = -1;
  std::vector<int> queue{root};
  std::vector<char> in_tree(ne, 0);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int e : order) {
      int other = -1;
      if (fc.src[e] == v) other = fc.dst[e];
      else if (fc.dst[e] == v) other = fc.src[e];
      if (other < 0 || parent_edge[other] != -2) continue;
      parent_edge[other] = e;
      parent[other] = v;
      depth[other] = depth[v] + 1;
      in_tree[e] = 1;
      queue.push_back(other);
    }
  }
  TreeCycles T;
  for (int e : order) (in_tree[e] ? T.tree_edges : T.cotree_edges).push_back(e);
  std::sort(T.cotree_edges.begin(), T.cotree_edges.end());
  for (int e : T.cotree_edges) {
    Cycle c(ne, 0);
    c[e] = 1;
    // Return from dst(e) to src(e) through the tree.
    int a = fc.dst[e], b = fc.src[e];
    std::vector<std::pair<int, long long>> tail;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        int pe = parent_edge[a];
        c[pe] += (fc.src[pe] == a) ? 1 : -1;  // walking a -> parent
        a = parent[a];
      } else {
        int pe = parent_edge[b];
        tail.emplace_back(pe, (fc.src[pe] == parent[b]) ? 1 : -1);  // walking parent -> b
        b = parent[b];
      }
    }
    for (auto& [pe, sgn] : tail) c[pe] += sgn;
    T.cycles.push_back(std::move(c));
  }
  return T;
}

// Alternating Smith reduction of the intersection form on the given cycles.
inline SymplecticBasis symplectic_reduce(const FlatComplex& fc, std::vector<Cycle> X) {
  const int m = static_cast<int>(X.size());
  std::vector<std::vector<long long>> M(m, std::vector<long long>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      M[i][j] = intersection(fc, X[i], X[j]);
      M[j][i] = -M[i][j];
    }
  auto add = [&](int t, int s, long long c) {
    if (!c) return;
    for (size_t e = 0; e < X[t].size(); ++e) X[t][e] += c * X[s][e];
    for (int x = 0; x < m; ++x)
      if (x != t) {
        M[t][x] += c * M[s][x];
        M[x][t] = -M[t][x];
      }
  };
  auto floordiv = [](long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  };
  std::vector<char> active(m, 1);
  SymplecticBasis B;
  while (true) {
    int bi = -1, bj = -1;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (active[i] && active[j] && M[i][j] != 0 && (bi < 0 || std::llabs(M[i][j]) < std::llabs(M[bi][bj]))) {
          bi = i;
          bj = j;
        }
    if (bi < 0) break;
    const long long piv = M[bi][bj];
    bool dirty = false;
    for (int k = 0; k < m; ++k) {
      if (!active[k] || k == bi || k == bj) continue;
      long long qa = floordiv(M[bi][k], piv), qb = floordiv(M[bj][k], piv);
      add(k, bj, -qa);
      add(k, bi, qb);
      if (M[bi][k] != 0 || M[bj][k] != 0) dirty = true;
    }
    if (dirty) continue;
    if (std::llabs(piv) != 1) throw Error(Errc::Internal, "intersection form is not unimodular");
    active[bi] = active[bj] = 0;
    if (piv == 1)
      B.pairs.emplace_back(X[bi], X[bj]);
    else
      B.pairs.emplace_back(X[bj], X[bi]);
  }
  for (int i = 0; i < m; ++i)
    if (active[i]) B.radical.push_back(X[i]);
  return B;
}

// Different seeds give different trees and a random unimodular mixing before reduction.
inline SymplecticBasis symplectic_basis(const FlatComplex& fc, std::uint64_t seed = 0) {
  TreeCycles T = fundamental_cycles(fc, seed);
  std::vector<Cycle> X = T.cycles;
  if (seed && X.size() > 1) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int t = 0; t < 3 * static_cast<int>(X.size()); ++t) {
      size_t i = rng() % X.size(), j = rng() % X.size();
      if (i == j) continue;
      long long c = (rng() & 1) ? 1 : -1;
      for (size_t e = 0; e < X[i].size(); ++e) X[i][e] += c * X[j][e];
    }
  }
  return symplectic_reduce(fc, X);
}

inline SymplecticBasis symplectic_basis(const Surface& S, std::uint64_t seed = 0) {
  if (surface_genus(S) == 0) throw Error(Errc::GenusZero, "no symplectic basis in genus 0");
  SymplecticBasis B = symplectic_basis(S.complex, seed);
  if (static_cast<int>(B.pairs.size()) != surface_genus(S)) throw Error(Errc::Internal, "rank of the symplectic part");
  return B;
}

inline SymplecticBasis symplectic_basis(const CompactSurface& C, std::uint64_t seed = 0) {
  SymplecticBasis B = symplectic_basis(C.complex, seed);
  if (static_cast<int>(B.pairs.size()) != compact_genus(C)) throw Error(Errc::Internal, "rank of the symplectic part");
  return B;
}

enum class Side { Left, Right };

struct Pushoff {
  Side side = Side::Left;
  std::set<int> flipped;  // vertices passed on the other side

  Side at(int v) const {
    bool f = flipped.count(v) > 0;
    return f ? (side == Side::Left ? Side::Right : Side::Left) : side;
  }
};

struct CurveComponent {
  Cycle chain;
  double turning = 0;
  long long index = 0;
  std::vector<int> vertices;  // vertex of each passage
};

// Desingularizes an edge cycle into disjoint simple closed curves.
inline std::vector<CurveComponent> pushoff_curves(const FlatComplex& fc, const Cycle& c, const Pushoff& rule = {}) {
  if (!is_closed(fc, c)) throw Error(Errc::NotClosed, "chain has nonzero boundary");
  const int ne = fc.num_edges();
  std::vector<int> offset(ne + 1, 0);
  for (int e = 0; e < ne; ++e) offset[e + 1] = offset[e] + static_cast<int>(std::llabs(c[e]));
  const int nstrands = offset[ne];
  if (nstrands == 0) return {};
  std::vector<int> next(nstrands, -1);
  std::vector<double> turn_after(nstrands, 0);
  std::vector<int> vertex_after(nstrands, -1);

  for (int v = 0; v < fc.num_vertices(); ++v) {
    const VertexStar& V = fc.vertices[v];
    struct End {
      int strand;
      bool in;
      double pos;
    };
    std::vector<End> ends;
    for (size_t i = 0; i < V.ccw.size(); ++i) {
      const HalfEdge& h = V.ccw[i];
      long long ce = c[h.edge];
      int m = static_cast<int>(std::llabs(ce));
      if (!m) continue;
      bool in = h.at_start ? (ce < 0) : (ce > 0);
      for (int t = 0; t < m; ++t) {
        int tt = h.at_start ? t : m - 1 - t;
        ends.push_back({offset[h.edge] + tt, in, V.pos[i]});
      }
    }
    if (ends.empty()) continue;
    const Side side = rule.at(v);
    // Reading counterclockwise, the opening end of each arc.
    auto opens = [&](const End& e) { return side == Side::Left ? !e.in : e.in; };
    const int k = static_cast<int>(ends.size());
    int level = 0, low = 0, cut = 0;
    for (int i = 0; i < k; ++i) {
      level += opens(ends[i]) ? 1 : -1;
      if (level < low) {
        low = level;
        cut = i + 1;
      }
    }
    if (level != 0) throw Error(Errc::NotClosed, "unbalanced vertex");
    std::vector<int> stack;
    for (int s = 0; s < k; ++s) {
      int i = (cut + s) % k;
      if (opens(ends[i])) {
        stack.push_back(i);
        continue;
      }
      const End& a = ends[stack.back()];
      const End& b = ends[i];
      stack.pop_back();
      const End& in = a.in ? a : b;
      const End& out = a.in ? b : a;
      double theta, tr;
      if (side == Side::Left) {
        theta = std::fmod(in.pos - out.pos + V.total, V.total);
        tr = kPi - theta;
      } else {
        theta = std::fmod(out.pos - in.pos + V.total, V.total);
        tr = theta - kPi;
      }
      next[in.strand] = out.strand;
      turn_after[in.strand] = tr;
      vertex_after[in.strand] = v;
    }
  }

  std::vector<CurveComponent> comps;
  std::vector<char> seen(nstrands, 0);
  auto edge_of = [&](int s) { return static_cast<int>(std::upper_bound(offset.begin(), offset.end(), s) - offset.begin()) - 1; };
  for (int s0 = 0; s0 < nstrands; ++s0) {
    if (seen[s0]) continue;
    CurveComponent comp;
    comp.chain.assign(ne, 0);
    int s = s0;
    while (!seen[s]) {
      seen[s] = 1;
      int e = edge_of(s);
      comp.chain[e] += c[e] > 0 ? 1 : -1;
      comp.turning += turn_after[s];
      comp.vertices.push_back(vertex_after[s]);
      s = next[s];
      if (s < 0) throw Error(Errc::Internal, "broken strand matching");
    }
    double r = comp.turning / (2 * kPi);
    comp.index = std::llround(r);
    if (std::fabs(r - static_cast<double>(comp.index)) > 1e-6)
      throw Error(Errc::IndexNotInteger, "turning " + std::to_string(comp.turning));
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline long long curve_index(const FlatComplex& fc, const Cycle& c, const Pushoff& rule = {}) {
  auto comps = pushoff_curves(fc, c, rule);
  if (comps.empty()) throw Error(Errc::NotClosed, "empty cycle");
  if (comps.size() != 1) throw Error(Errc::NotSimple, std::to_string(comps.size()) + " components");
  return comps[0].index;
}

inline long long curve_index(const Surface& S, const Cycle& c, const Pushoff& rule = {}) {
  return curve_index(S.complex, c, rule);
}

// Index of a simple closed curve in the class of x (x primitive, genus one).
inline long long class_index(const FlatComplex& fc, const SymplecticBasis& B, const Cycle& x, const Pushoff& rule) {
  const Cycle& a = B.pairs[0].first;
  const Cycle& b = B.pairs[0].second;
  long long ta = intersection(fc, x, a), tb = intersection(fc, x, b);
  for (const auto& comp : pushoff_curves(fc, x, rule)) {
    long long ca = intersection(fc, comp.chain, a), cb = intersection(fc, comp.chain, b);
    if ((ca == ta && cb == tb) || (ca == -ta && cb == -tb)) return comp.index;
  }
  throw Error(Errc::Internal, "no component in the class of the cycle");
}

inline long long rotation_number(const Surface& S, std::uint64_t seed = 0, const Pushoff& rule = {}) {
  if (surface_genus(S) != 1) throw Error(Errc::NotGenusOne, "rotation number needs genus 1");
  SymplecticBasis B = symplectic_basis(S, seed);
  long long g = 0;
  g = gcd_ll(g, class_index(S.complex, B, B.pairs[0].first, rule));
  g = gcd_ll(g, class_index(S.complex, B, B.pairs[0].second, rule));
  for (const auto& v : S.complex.vertices) g = gcd_ll(g, v.degree);
  for (const auto& p : S.poles) g = gcd_ll(g, p.order);
  return g;
}

// q(x) = sum over pushoff components of (index + 1), mod 2.
inline int spin_form(const FlatComplex& fc, const Cycle& x, const Pushoff& rule = {}) {
  long long q = 0;
  for (const auto& comp : pushoff_curves(fc, x, rule)) q += comp.index + 1;
  return static_cast<int>(((q % 2) + 2) % 2);
}

// Same form, extended quadratically from simple fundamental cycles.
inline int spin_form_via_tree(const FlatComplex& fc, const TreeCycles& T, const Cycle& x) {
  const size_t m = T.cycles.size();
  std::vector<long long> coef(m), q(m);
  for (size_t i = 0; i < m; ++i) {
    coef[i] = x[T.cotree_edges[i]];
    q[i] = ((curve_index(fc, T.cycles[i]) + 1) % 2 + 2) % 2;
  }
  long long total = 0;
  for (size_t i = 0; i < m; ++i) {
    if (!coef[i]) continue;
    total += coef[i] * q[i];
    for (size_t j = i + 1; j < m; ++j)
      if (coef[j]) total += coef[i] * coef[j] * intersection(fc, T.cycles[i], T.cycles[j]);
  }
  return static_cast<int>(((total % 2) + 2) % 2);
}

inline int arf(const FlatComplex& fc, const SymplecticBasis& B) {
  int parity = 0;
  for (const auto& [a, b] : B.pairs) parity ^= spin_form(fc, a) & spin_form(fc, b);
  return parity;
}

inline int spin_parity(const CompactSurface& C, std::uint64_t seed = 0) {
  for (const auto& v : C.complex.vertices)
    if (v.degree % 2) throw Error(Errc::SpinUndefined, "odd zero");
  return arf(C.complex, symplectic_basis(C, seed));
}

inline bool spin_defined(const Signature& sig) {
  for (int z : sig.zeros)
    if (z % 2) return false;
  std::vector<int> p = sig.poles;
  std::sort(p.begin(), p.end());
  return std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 0; }) || p == std::vector<int>{1, 1};
}

inline int spin_parity(const Surface& S, std::uint64_t seed = 0) {
  Signature sig = stratum_of(S);
  if (!spin_defined(sig)) throw Error(Errc::SpinUndefined, to_string(sig));
  if (sig.poles == std::vector<int>{1, 1}) return spin_parity(close_two_simple_poles(S), seed);
  if (surface_genus(S) == 0) return 0;
  return arf(S.complex, symplectic_basis(S, seed));
}

// Pairing D_i^+ -> D_sigma(i)^- with reversed labels, compatible with the half-line gluings.
inline bool has_zippered_involution(const Datum& x) {
  const Layout L = layout_of(x);
  std::vector<std::vector<int>> top, bot;
  std::vector<int> next;
  for (const auto& chain : L.chains) {
    int base = static_cast<int>(top.size());
    int m = static_cast<int>(chain.size());
    for (int i = 0; i < m; ++i) {
      top.push_back(chain[i].first);
      bot.push_back(chain[i].second);
      next.push_back(base + (i + 1) % m);
    }
  }
  auto reversed = [](std::vector<int> v) {
    std::reverse(v.begin(), v.end());
    return v;
  };
  // Cylinder blocks pair by reversed labels; labels are unique so the partner is forced.
  if (L.cplus.size() != L.cminus.size()) return false;
  std::vector<char> used_c(L.cminus.size(), 0);
  for (const auto& cp : L.cplus) {
    bool hit = false;
    for (size_t j = 0; j < L.cminus.size() && !hit; ++j)
      if (!used_c[j] && L.cminus[j] == reversed(cp)) {
        used_c[j] = 1;
        hit = true;
      }
    if (!hit) return false;
  }
  const int d = static_cast<int>(top.size());
  std::vector<int> sigma(d, -1), inv(d, -1);
  std::function<bool(int)> search = [&](int i) -> bool {
    if (i == d) {
      for (int k = 0; k < d; ++k)
        if (next[sigma[k]] != inv[k]) return false;
      return true;
    }
    const auto want = reversed(top[i]);
    for (int j = 0; j < d; ++j) {
      if (inv[j] >= 0 || bot[j] != want) continue;
      sigma[i] = j;
      inv[j] = i;
      // Prune with every constraint whose terms are already assigned.
      bool ok = true;
      for (int k = 0; k <= i && ok; ++k)
        if (inv[k] >= 0 && sigma[k] >= 0 && next[sigma[k]] != inv[k]) ok = false;
      if (ok && search(i + 1)) return true;
      sigma[i] = -1;
      inv[j] = -1;
    }
    return false;
  };
  return search(0);
}

}  // namespace polestrata
