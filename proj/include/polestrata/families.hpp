#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "polestrata/surface.hpp"

namespace polestrata {

// Genus-0 surface with a single zero of degree sum(poles) - 2.
inline Layout base_layout(std::vector<int> poles) {
  if (poles.empty() || std::accumulate(poles.begin(), poles.end(), 0) < 2)
    throw Error(Errc::OutOfRange, "need at least two units of pole order");
  for (int p : poles)
    if (p < 1) throw Error(Errc::OutOfRange, "pole orders are positive");
  std::sort(poles.rbegin(), poles.rend());
  Layout L;
  const int s = static_cast<int>(poles.size());
  std::vector<int> hub_labels;
  for (int i = 1; i < s; ++i) hub_labels.push_back(i);
  if (poles[0] >= 2) {
    std::vector<Layout::Pair> hub(poles[0] - 1);
    hub[0].first = hub_labels;
    L.chains.push_back(hub);
  } else {
    L.cplus.push_back(hub_labels);
  }
  for (int i = 1; i < s; ++i) {
    if (poles[i] >= 2) {
      std::vector<Layout::Pair> chain(poles[i] - 1);
      chain[0].second = {i};
      L.chains.push_back(chain);
    } else {
      L.cminus.push_back({i});
    }
  }
  return L;
}

namespace detail {

inline int label_count(const Layout& L) {
  int n = 0;
  for (const auto& c : L.chains)
    for (const auto& [t, b] : c) n += static_cast<int>(t.size());
  for (const auto& c : L.cplus) n += static_cast<int>(c.size());
  return n;
}

// Visits every (+ domain, position) x (- domain, position) slot in canonical order.
inline void for_each_slot_pair(Layout& L, const std::function<bool(std::vector<int>&, int, std::vector<int>&, int)>& f) {
  std::vector<std::vector<int>*> plus, minus;
  for (auto& c : L.chains)
    for (auto& pr : c) {
      plus.push_back(&pr.first);
      minus.push_back(&pr.second);
    }
  for (auto& c : L.cplus) plus.push_back(&c);
  for (auto& c : L.cminus) minus.push_back(&c);
  for (auto* P : plus)
    for (int i = 0; i <= static_cast<int>(P->size()); ++i)
      for (auto* M : minus)
        for (int j = 0; j <= static_cast<int>(M->size()); ++j)
          if (f(*P, i, *M, j)) return;
}

}  // namespace detail

// Breaks the single zero (degree nb) into (s-1, nb+1-s) with a new segment z,
// then replaces z by [u, w] on top and [w, u] on bottom.
inline Layout bubble_handle(const Layout& base, int s) {
  Surface S0 = assemble(datum_of(base));
  if (S0.complex.num_vertices() != 1) throw Error(Errc::OutOfRange, "bubbling needs a single zero");
  const int nb = S0.complex.vertices[0].degree;
  if (s < 1 || s > nb + 1) throw Error(Errc::OutOfRange, "bubble parameter " + std::to_string(s));
  const int n = detail::label_count(base);
  const int z = n + 1;
  Layout work = base;
  Layout found;
  bool ok = false;
  detail::for_each_slot_pair(work, [&](std::vector<int>& P, int i, std::vector<int>& M, int j) {
    P.insert(P.begin() + i, z);
    M.insert(M.begin() + j, z);
    try {
      Surface S = assemble(datum_of(work));
      const auto& fc = S.complex;
      int a = fc.src[z - 1], b = fc.dst[z - 1];
      if (a != b && fc.vertices[a].degree == s - 1 && fc.vertices[b].degree == nb + 1 - s) {
        found = work;
        ok = true;
      }
    } catch (const Error&) {
    }
    P.erase(P.begin() + i);
    M.erase(M.begin() + j);
    return ok;
  });
  if (!ok) throw Error(Errc::Internal, "no slot realizes the requested zero split");
  const int u = n + 1, w = n + 2;
  auto replace = [&](std::vector<int>& v, std::vector<int> with) {
    for (size_t k = 0; k < v.size(); ++k)
      if (v[k] == z) {
        v.erase(v.begin() + k);
        v.insert(v.begin() + k, with.begin(), with.end());
        return;
      }
  };
  for (auto& c : found.chains)
    for (auto& pr : c) {
      replace(pr.first, {u, w});
      replace(pr.second, {w, u});
    }
  for (auto& c : found.cplus) replace(c, {u, w});
  for (auto& c : found.cminus) replace(c, {w, u});
  return found;
}

struct BubbledFamily {
  Datum datum;
  std::vector<Cx> zeta;  // zeta_j = (1, j/(n+1)); any Re > 0 family member gives the same stratum
  int u_label, w_label;  // the two segments spanning the bubbled cylinder
};

// Genus one surface in H(sum p, -p_1, ..., -p_s) with rotation number gcd(k, p_i).
inline BubbledFamily bubbled_torus(int k, const std::vector<int>& poles) {
  const int n = std::accumulate(poles.begin(), poles.end(), 0);
  if (n < 2 || k < 1 || k > n - 1) throw Error(Errc::OutOfRange, "bubbled_torus parameter");
  Layout L = bubble_handle(base_layout(poles), k);
  BubbledFamily F;
  F.datum = datum_of(L);
  F.zeta = default_zeta(F.datum.n);
  F.u_label = F.datum.n - 1;
  F.w_label = F.datum.n;
  return F;
}

// C_0 + s_1 + ... + s_g realized over the genus-0 base with the given poles.
inline Datum realize_bubbles(const std::vector<int>& poles, const std::vector<int>& bubbles) {
  Layout L = base_layout(poles);
  for (int s : bubbles) L = bubble_handle(L, s);
  return datum_of(L);
}

}  // namespace polestrata
