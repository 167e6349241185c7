#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "polestrata/datum.hpp"

namespace fixtures {

using polestrata::Datum;

// D_0: top z1 z2 / bottom z2 z3, D_1: top z3 z4 / bottom z4 z1.
inline Datum pole3() {
  Datum x;
  x.n = 4;
  x.pi_t = {1, 2, 3, 4};
  x.pi_b = {2, 3, 4, 1};
  x.nplus = {0, 2, 4};
  x.nminus = {0, 2, 4};
  x.d_breaks = {0, 2};
  return x;
}

inline Datum two_poles() {
  Datum x = pole3();
  x.d_breaks = {0, 1, 2};
  return x;
}

inline Datum plane() {
  Datum x;
  x.n = 0;
  x.nplus = {0, 0};
  x.nminus = {0, 0};
  x.d_breaks = {0, 1};
  return x;
}

inline Datum single_cylinder_pair() {
  Datum x;
  x.n = 1;
  x.pi_t = {1};
  x.pi_b = {1};
  x.nplus = {0, 1};
  x.nminus = {0, 1};
  x.d_breaks = {0};
  x.splus = 1;
  x.sminus = 1;
  return x;
}

// Random layout; may be disconnected, callers filter through assemble.
inline polestrata::Layout random_layout(std::mt19937_64& rng, int max_labels = 7) {
  auto uni = [&](int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); };
  polestrata::Layout L;
  int chains = uni(0, 3);
  int cp = uni(0, 2), cm = uni(0, 2);
  if (chains == 0 && (cp == 0 || cm == 0)) cp = cm = std::max(1, std::max(cp, cm));
  for (int c = 0; c < chains; ++c) L.chains.emplace_back(uni(1, 3));
  int dcount = 0;
  for (auto& c : L.chains) dcount += static_cast<int>(c.size());
  int n = std::max(uni(0, max_labels), std::max(cp, cm));
  std::vector<int> top(n), bot(n);
  for (int i = 0; i < n; ++i) top[i] = bot[i] = i + 1;
  std::shuffle(top.begin(), top.end(), rng);
  std::shuffle(bot.begin(), bot.end(), rng);
  // Cylinders get at least one label each; the rest is spread at random.
  auto split = [&](const std::vector<int>& labels, int cyl, std::vector<std::vector<int>>& dchunks,
                   std::vector<std::vector<int>>& cchunks) {
    std::vector<int> owner(labels.size());
    int slots = dcount + cyl;
    for (size_t i = 0; i < labels.size(); ++i) owner[i] = uni(0, slots - 1);
    for (int c = 0; c < cyl; ++c) owner[c] = dcount + c;
    std::sort(owner.begin(), owner.end());
    dchunks.assign(dcount, {});
    cchunks.assign(cyl, {});
    for (size_t i = 0; i < labels.size(); ++i) {
      if (owner[i] < dcount)
        dchunks[owner[i]].push_back(labels[i]);
      else
        cchunks[owner[i] - dcount].push_back(labels[i]);
    }
  };
  std::vector<std::vector<int>> dt, db;
  split(top, cp, dt, L.cplus);
  split(bot, cm, db, L.cminus);
  int k = 0;
  for (auto& c : L.chains)
    for (auto& pr : c) {
      pr.first = dt[k];
      pr.second = db[k];
      ++k;
    }
  return L;
}

inline std::vector<polestrata::Cx> random_zeta(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 7), im(-9, 9);
  std::vector<polestrata::Cx> z;
  for (int i = 0; i < n; ++i)
    z.emplace_back(polestrata::Rational(num(rng), den(rng)), polestrata::Rational(im(rng), den(rng)));
  return z;
}

}  // namespace fixtures
