#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "polestrata/signature.hpp"
#include "polestrata/union_find.hpp"

namespace polestrata {

// C_0 (+) s_1 (+) ... (+) s_g over a genus-0 minimal base.
struct ComponentTerm {
  Signature base;
  std::vector<int> bubbles;

  int base_degree() const { return base.zeros.at(0); }
  int degree_before(size_t i) const { return base_degree() + 2 * static_cast<int>(i); }
  int zero_degree() const { return degree_before(bubbles.size()); }
  Signature ambient() const { return Signature({zero_degree()}, base.poles); }
  bool operator==(const ComponentTerm& o) const { return base == o.base && bubbles == o.bubbles; }
  bool operator<(const ComponentTerm& o) const { return base == o.base ? bubbles < o.bubbles : base < o.base; }
};

inline std::string to_string(const ComponentTerm& t) {
  std::string out = "C0" + to_string(t.base).substr(1);
  for (int s : t.bubbles) out += "+" + std::to_string(s);
  return out;
}

inline ComponentTerm minimal_base(int degree, std::vector<int> poles) {
  Signature b({degree}, std::move(poles));
  if (!well_formed(b) || genus(b) != 0) throw Error(Errc::MalformedSignature, "base must be a genus-0 minimal stratum");
  return ComponentTerm{b, {}};
}

inline ComponentTerm bubble(ComponentTerm t, int s) {
  if (s < 1 || s > t.zero_degree() + 1)
    throw Error(Errc::OutOfRange, "bubble " + std::to_string(s) + " on a zero of degree " + std::to_string(t.zero_degree()));
  t.bubbles.push_back(s);
  return t;
}

inline bool admissible(const ComponentTerm& t) {
  for (size_t i = 0; i < t.bubbles.size(); ++i)
    if (t.bubbles[i] < 1 || t.bubbles[i] > t.degree_before(i) + 1) return false;
  return true;
}

struct BubbleRules {
  bool symmetric_guard = true;   // forbid the exceptional swap in both directions
  bool first_bubble_gcd = true;  // genus-one classification on s_1
};

// One application of any relation, restricted to admissible results.
inline std::vector<std::vector<int>> neighbor_tuples(const std::vector<int>& t, int n0, int pole_gcd,
                                                     const BubbleRules& rules = {}) {
  std::vector<std::vector<int>> out;
  auto ok = [&](const std::vector<int>& v) {
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] < 1 || v[i] > n0 + 2 * static_cast<int>(i) + 1) return false;
    return true;
  };
  auto emit = [&](std::vector<int> v) {
    if (v != t && ok(v)) out.push_back(std::move(v));
  };
  const size_t g = t.size();
  for (size_t i = 0; i + 1 < g; ++i) {
    const int nb = n0 + 2 * static_cast<int>(i);
    const int s1 = t[i], s2 = t[i + 1];
    auto with = [&](int a, int b) {
      std::vector<int> v = t;
      v[i] = a;
      v[i + 1] = b;
      return v;
    };
    bool forward_exception = 2 * s1 == nb + 2 && 2 * s2 == nb + 4;
    bool backward_exception = 2 * s2 == nb + 2 && 2 * s1 == nb + 4;
    bool blocked = forward_exception || (rules.symmetric_guard && backward_exception);
    if (s1 <= nb + 1 && s2 <= nb + 1 && !blocked) emit(with(s2, s1));
    if (s1 <= nb + 1 && s2 >= 2 && s2 <= nb + 3) emit(with(s2 - 1, s1 + 1));
    if (s2 - s1 >= 2) emit(with(s2 - 2, s1));
    // Relations (2) and (3) read right to left.
    if (s2 - 1 <= nb + 1 && s1 + 1 >= 2 && s1 + 1 <= nb + 3) emit(with(s2 - 1, s1 + 1));
    if (s1 + 2 - s2 >= 2) emit(with(s2, s1 + 2));
  }
  for (size_t i = 0; i < g; ++i) {
    std::vector<int> v = t;
    v[i] = n0 + 2 * static_cast<int>(i) + 2 - t[i];
    emit(v);
  }
  if (rules.first_bubble_gcd && g > 0)
    for (int k = 1; k <= n0 + 1; ++k)
      if (gcd_ll(k, pole_gcd) == gcd_ll(t[0], pole_gcd)) {
        std::vector<int> v = t;
        v[0] = k;
        emit(v);
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::set<ComponentTerm> neighbors(const ComponentTerm& term, const BubbleRules& rules = {}) {
  if (!admissible(term)) throw Error(Errc::OutOfRange, "term " + to_string(term));
  long long pg = 0;
  for (int p : term.base.poles) pg = gcd_ll(pg, p);
  std::set<ComponentTerm> out;
  for (auto& v : neighbor_tuples(term.bubbles, term.base_degree(), static_cast<int>(pg), rules))
    out.insert(ComponentTerm{term.base, v});
  return out;
}

namespace detail {

inline int resolve_threads(int threads) {
  if (threads > 0) return threads;
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// Workers emit edges for a strided share of the states; merging is order independent.
template <class EdgesOf>
DisjointSets parallel_closure(int states, int threads, EdgesOf edges_of) {
  threads = std::max(1, std::min(resolve_threads(threads), states));
  std::vector<std::vector<std::pair<int, int>>> local(threads);
  auto work = [&](int w) {
    for (int i = w; i < states; i += threads) edges_of(i, local[w]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  DisjointSets ds(states);
  for (const auto& edges : local)
    for (auto [a, b] : edges) ds.unite(a, b);
  return ds;
}

}  // namespace detail

struct ComponentClass {
  std::vector<int> representative;  // lexicographically least member
  std::vector<std::vector<int>> members;
};

// Closure of the relations over every admissible bubble tuple of a minimal stratum.
inline std::vector<ComponentClass> component_classes(const Signature& sig, const BubbleRules& rules = {}, int threads = 1) {
  if (!is_minimal(sig)) throw Error(Errc::MalformedSignature, "component_classes needs a single zero");
  const int g = genus(sig);
  if (g < 1) throw Error(Errc::GenusZero, "component_classes needs genus >= 1");
  const int n0 = sig.zeros[0] - 2 * g;
  if (n0 < 0) throw Error(Errc::MalformedSignature, "base degree is negative");
  long long pg = 0;
  for (int p : sig.poles) pg = gcd_ll(pg, p);

  std::vector<int> radix(g);
  int total = 1;
  for (int i = 0; i < g; ++i) {
    radix[i] = n0 + 2 * i + 1;
    total *= radix[i];
  }
  // Mixed radix with the first bubble most significant, so index order is lexicographic.
  auto decode = [&](int idx) {
    std::vector<int> t(g);
    for (int i = g - 1; i >= 0; --i) {
      t[i] = idx % radix[i] + 1;
      idx /= radix[i];
    }
    return t;
  };
  auto encode = [&](const std::vector<int>& t) {
    int idx = 0;
    for (int i = 0; i < g; ++i) idx = idx * radix[i] + (t[i] - 1);
    return idx;
  };
  detail::DisjointSets ds = detail::parallel_closure(total, threads, [&](int i, std::vector<std::pair<int, int>>& out) {
    for (const auto& v : neighbor_tuples(decode(i), n0, static_cast<int>(pg), rules)) out.emplace_back(i, encode(v));
  });
  std::map<int, ComponentClass> by_root;
  for (int i = 0; i < total; ++i) {
    ComponentClass& c = by_root[ds.find(i)];
    c.members.push_back(decode(i));
  }
  std::vector<ComponentClass> out;
  for (auto& [root, c] : by_root) {
    c.representative = c.members.front();
    out.push_back(std::move(c));
  }
  return out;
}

struct PqOrbit {
  int label;  // gcd(p, q, d)
  long long size;
  std::pair<int, int> representative;
  bool label_constant;
};

struct PqReport {
  int modulus;
  bool reduced;  // degree translations used
  std::vector<PqOrbit> orbits;
};

// Orbits of (p,q) under phi_1, phi_2 (and degree translations when r+s >= 3).
inline PqReport pq_orbit_classes(const Signature& sig, int threads = 1) {
  if (!well_formed(sig) || genus(sig) != 1) throw Error(Errc::NotGenusOne, to_string(sig));
  for (int z : sig.zeros)
    if (z < 1) throw Error(Errc::MalformedSignature, "zero of degree 0");
  const int d = degree_gcd(sig);
  PqReport R;
  R.reduced = sig.zeros.size() + sig.poles.size() >= 3;
  std::vector<int> degrees = sig.zeros;
  degrees.insert(degrees.end(), sig.poles.begin(), sig.poles.end());
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  const int m = R.reduced ? degrees.back() : sig.zeros[0];
  R.modulus = m;
  const int states = m * m;
  auto id = [m](int p, int q) { return ((p % m + m) % m) * m + ((q % m + m) % m); };
  detail::DisjointSets ds = detail::parallel_closure(states, threads, [&](int i, std::vector<std::pair<int, int>>& out) {
    const int p = i / m, q = i % m;
    if (!R.reduced && i == 0) return;
    out.emplace_back(i, id(p + q, q));
    out.emplace_back(i, id(p, q + p));
    if (R.reduced)
      for (int k : degrees) {
        out.emplace_back(i, id(p + k, q));
        out.emplace_back(i, id(p, q + k));
      }
  });
  std::map<int, PqOrbit> by_root;
  for (int i = R.reduced ? 0 : 1; i < states; ++i) {
    const int p = i / m, q = i % m;
    const int label = static_cast<int>(gcd_ll(gcd_ll(p, q), d));
    auto [it, fresh] = by_root.try_emplace(ds.find(i), PqOrbit{label, 0, {p, q}, true});
    it->second.size += 1;
    if (it->second.label != label) it->second.label_constant = false;
  }
  for (auto& [root, o] : by_root) R.orbits.push_back(o);
  std::sort(R.orbits.begin(), R.orbits.end(), [](const PqOrbit& a, const PqOrbit& b) {
    return a.label != b.label ? a.label < b.label : a.representative < b.representative;
  });
  return R;
}

}  // namespace polestrata
