#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "polestrata/error.hpp"
#include "polestrata/exact.hpp"

namespace polestrata {

// Combinatorial data of the infinite zippered rectangle construction.
// pi_t[j] / pi_b[j] is the label at top / bottom position j+1.
struct Datum {
  int n = 0;
  std::vector<int> pi_t, pi_b;
  std::vector<int> nplus, nminus;
  std::vector<int> d_breaks{0};
  int splus = 0, sminus = 0;

  int d() const { return d_breaks.empty() ? 0 : d_breaks.back(); }
  bool operator==(const Datum&) const = default;
};

enum class Violation {
  NegativeCount,
  NotAPermutation,
  BadChainBreaks,
  NplusLength,
  NminusLength,
  NonMonotonicBreaks,
  EndpointMismatch,
  EmptyCylinder,
  NoDomains,
};

inline const char* violation_name(Violation v) {
  switch (v) {
    case Violation::NegativeCount: return "NegativeCount";
    case Violation::NotAPermutation: return "NotAPermutation";
    case Violation::BadChainBreaks: return "BadChainBreaks";
    case Violation::NplusLength: return "NplusLength";
    case Violation::NminusLength: return "NminusLength";
    case Violation::NonMonotonicBreaks: return "NonMonotonicBreaks";
    case Violation::EndpointMismatch: return "EndpointMismatch";
    case Violation::EmptyCylinder: return "EmptyCylinder";
    case Violation::NoDomains: return "NoDomains";
  }
  return "?";
}

namespace detail {

inline bool is_permutation_1n(const std::vector<int>& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<char> seen(n + 1, 0);
  for (int x : p) {
    if (x < 1 || x > n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

// Reports at most one violation per break array: the first rule it fails.
inline void check_breaks(const std::vector<int>& b, int d, int s, int n, Violation length_rule,
                         std::vector<Violation>& out) {
  if (static_cast<int>(b.size()) != d + s + 1) {
    out.push_back(length_rule);
    return;
  }
  for (size_t i = 1; i < b.size(); ++i)
    if (b[i] < b[i - 1]) {
      out.push_back(Violation::NonMonotonicBreaks);
      return;
    }
  if (b.front() != 0 || b.back() != n) {
    out.push_back(Violation::EndpointMismatch);
    return;
  }
  for (int i = d; i < d + s; ++i)
    if (b[i + 1] <= b[i]) {
      out.push_back(Violation::EmptyCylinder);
      return;
    }
}

}  // namespace detail

inline std::vector<Violation> validate_datum(const Datum& x) {
  std::vector<Violation> out;
  if (x.n < 0 || x.splus < 0 || x.sminus < 0) {
    out.push_back(Violation::NegativeCount);
    return out;
  }
  if (!detail::is_permutation_1n(x.pi_t, x.n) || !detail::is_permutation_1n(x.pi_b, x.n))
    out.push_back(Violation::NotAPermutation);
  bool breaks_ok = !x.d_breaks.empty() && x.d_breaks.front() == 0;
  for (size_t i = 1; breaks_ok && i < x.d_breaks.size(); ++i) breaks_ok = x.d_breaks[i] > x.d_breaks[i - 1];
  if (!breaks_ok) {
    out.push_back(Violation::BadChainBreaks);
    return out;
  }
  const int d = x.d();
  detail::check_breaks(x.nplus, d, x.splus, x.n, Violation::NplusLength, out);
  detail::check_breaks(x.nminus, d, x.sminus, x.n, Violation::NminusLength, out);
  if (d == 0 && x.splus == 0 && x.sminus == 0) out.push_back(Violation::NoDomains);
  return out;
}

// Domain-level view of a datum: chains of (top labels, bottom labels) pairs and cylinder blocks.
struct Layout {
  using Pair = std::pair<std::vector<int>, std::vector<int>>;
  std::vector<std::vector<Pair>> chains;
  std::vector<std::vector<int>> cplus, cminus;

  bool operator==(const Layout&) const = default;
};

inline Layout layout_of(const Datum& x) {
  if (!validate_datum(x).empty()) throw Error(Errc::MalformedDatum, "datum fails validation");
  Layout L;
  auto slice = [](const std::vector<int>& pi, int a, int b) {
    return std::vector<int>(pi.begin() + a, pi.begin() + b);
  };
  for (size_t k = 1; k < x.d_breaks.size(); ++k) {
    std::vector<Layout::Pair> chain;
    for (int i = x.d_breaks[k - 1]; i < x.d_breaks[k]; ++i)
      chain.emplace_back(slice(x.pi_t, x.nplus[i], x.nplus[i + 1]), slice(x.pi_b, x.nminus[i], x.nminus[i + 1]));
    L.chains.push_back(std::move(chain));
  }
  const int d = x.d();
  for (int j = 0; j < x.splus; ++j) L.cplus.push_back(slice(x.pi_t, x.nplus[d + j], x.nplus[d + j + 1]));
  for (int j = 0; j < x.sminus; ++j) L.cminus.push_back(slice(x.pi_b, x.nminus[d + j], x.nminus[d + j + 1]));
  return L;
}

inline Datum datum_of(const Layout& L) {
  Datum x;
  x.nplus = {0};
  x.nminus = {0};
  x.d_breaks = {0};
  for (const auto& chain : L.chains) {
    for (const auto& [top, bot] : chain) {
      x.pi_t.insert(x.pi_t.end(), top.begin(), top.end());
      x.pi_b.insert(x.pi_b.end(), bot.begin(), bot.end());
      x.nplus.push_back(static_cast<int>(x.pi_t.size()));
      x.nminus.push_back(static_cast<int>(x.pi_b.size()));
    }
    x.d_breaks.push_back(x.d_breaks.back() + static_cast<int>(chain.size()));
  }
  for (const auto& c : L.cplus) {
    x.pi_t.insert(x.pi_t.end(), c.begin(), c.end());
    x.nplus.push_back(static_cast<int>(x.pi_t.size()));
  }
  for (const auto& c : L.cminus) {
    x.pi_b.insert(x.pi_b.end(), c.begin(), c.end());
    x.nminus.push_back(static_cast<int>(x.pi_b.size()));
  }
  x.n = static_cast<int>(x.pi_t.size());
  x.splus = static_cast<int>(L.cplus.size());
  x.sminus = static_cast<int>(L.cminus.size());
  return x;
}

// zeta_j = (1, j/(n+1)).
inline std::vector<Cx> default_zeta(int n) {
  std::vector<Cx> z;
  for (int j = 1; j <= n; ++j) z.emplace_back(Rational(1), Rational(j, n + 1));
  return z;
}

}  // namespace polestrata
