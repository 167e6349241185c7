#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "polestrata/datum.hpp"
#include "polestrata/flat.hpp"
#include "polestrata/signature.hpp"
#include "polestrata/union_find.hpp"

namespace polestrata {

enum class DomainKind { DPlus, DMinus, CPlus, CMinus };

inline bool is_plus(DomainKind k) { return k == DomainKind::DPlus || k == DomainKind::CPlus; }
inline bool is_cyl(DomainKind k) { return k == DomainKind::CPlus || k == DomainKind::CMinus; }

inline const char* kind_name(DomainKind k) {
  switch (k) {
    case DomainKind::DPlus: return "D+";
    case DomainKind::DMinus: return "D-";
    case DomainKind::CPlus: return "C+";
    case DomainKind::CMinus: return "C-";
  }
  return "?";
}

// Piece 0 is the left line (or vertical), pieces 1..k the segments, piece k+1 the right one.
struct Domain {
  DomainKind kind;
  int index;  // position among domains of the same family
  int face;   // pole this domain belongs to
  std::vector<int> labels;
  std::vector<Cx> verts;  // V_0 = 0, V_j = V_{j-1} + zeta(label_j)
};

struct PoleRecord {
  int order;
  Cx residue;
};

struct Surface {
  Datum datum;
  std::vector<Cx> zeta;
  std::vector<Domain> domains;
  std::vector<Patch> patches;  // parallel to domains
  std::vector<PoleRecord> poles;
  FlatComplex complex;
};

namespace detail {

inline Domain make_domain(DomainKind k, int index, int face, const std::vector<int>& labels,
                          const std::vector<Cx>& zeta) {
  Domain d{k, index, face, labels, {Cx(0, 0)}};
  for (int l : labels) d.verts.push_back(d.verts.back() + zeta[l - 1]);
  return d;
}

inline Patch make_patch(const Domain& d, const std::vector<Cx>& zeta) {
  Patch p;
  p.region_left = is_plus(d.kind);
  Cx first, last;
  switch (d.kind) {
    case DomainKind::DPlus:
    case DomainKind::DMinus: first = last = Cx(1, 0); break;
    case DomainKind::CPlus: first = Cx(0, -1); last = Cx(0, 1); break;
    case DomainKind::CMinus: first = Cx(0, 1); last = Cx(0, -1); break;
  }
  p.pieces.push_back(Piece{first});
  for (int l : d.labels) p.pieces.push_back(Piece{zeta[l - 1], l - 1});
  p.pieces.push_back(Piece{last});
  return p;
}

inline void glue(std::vector<Patch>& P, int a, int ia, int b, int ib, bool flipped) {
  Piece& x = P[a].pieces[ia];
  Piece& y = P[b].pieces[ib];
  if (x.partner_patch >= 0 || y.partner_patch >= 0) throw Error(Errc::Internal, "piece glued twice");
  x.partner_patch = b;
  x.partner_piece = ib;
  x.flipped = flipped;
  y.partner_patch = a;
  y.partner_piece = ia;
  y.flipped = flipped;
}

}  // namespace detail

inline Surface assemble(const Datum& datum, const std::vector<Cx>& zeta) {
  auto viol = validate_datum(datum);
  if (!viol.empty()) throw Error(Errc::MalformedDatum, violation_name(viol.front()));
  if (static_cast<int>(zeta.size()) != datum.n)
    throw Error(Errc::MalformedDatum, "expected " + std::to_string(datum.n) + " zeta entries");
  for (const Cx& z : zeta)
    if (z.re <= 0) throw Error(Errc::NonPositiveRealPart, "zeta " + to_string(z));

  Surface S;
  S.datum = datum;
  S.zeta = zeta;
  const Layout L = layout_of(datum);
  int face = 0;
  // D domains are stored as D_i^+ then D_i^- for each i.
  std::vector<std::vector<int>> chain_plus, chain_minus;
  int di = 0;
  for (const auto& chain : L.chains) {
    chain_plus.emplace_back();
    chain_minus.emplace_back();
    for (const auto& [top, bot] : chain) {
      chain_plus.back().push_back(static_cast<int>(S.domains.size()));
      S.domains.push_back(detail::make_domain(DomainKind::DPlus, di, face, top, zeta));
      chain_minus.back().push_back(static_cast<int>(S.domains.size()));
      S.domains.push_back(detail::make_domain(DomainKind::DMinus, di, face, bot, zeta));
      ++di;
    }
    ++face;
  }
  for (size_t j = 0; j < L.cplus.size(); ++j)
    S.domains.push_back(detail::make_domain(DomainKind::CPlus, static_cast<int>(j), face++, L.cplus[j], zeta));
  for (size_t j = 0; j < L.cminus.size(); ++j)
    S.domains.push_back(detail::make_domain(DomainKind::CMinus, static_cast<int>(j), face++, L.cminus[j], zeta));

  for (const Domain& d : S.domains) S.patches.push_back(detail::make_patch(d, zeta));

  // Segments: label l on a + domain against label l on a - domain.
  std::vector<std::pair<int, int>> where_plus(datum.n, {-1, -1}), where_minus(datum.n, {-1, -1});
  for (size_t i = 0; i < S.domains.size(); ++i)
    for (size_t j = 0; j < S.domains[i].labels.size(); ++j) {
      auto& slot = is_plus(S.domains[i].kind) ? where_plus : where_minus;
      slot[S.domains[i].labels[j] - 1] = {static_cast<int>(i), static_cast<int>(j) + 1};
    }
  for (int l = 0; l < datum.n; ++l)
    detail::glue(S.patches, where_plus[l].first, where_plus[l].second, where_minus[l].first, where_minus[l].second,
                 false);

  for (size_t k = 0; k < chain_plus.size(); ++k) {
    const auto& cp = chain_plus[k];
    const auto& cm = chain_minus[k];
    const int m = static_cast<int>(cp.size());
    for (int i = 0; i < m; ++i) {
      detail::glue(S.patches, cp[i], 0, cm[i], 0, false);
      int nxt = cp[(i + 1) % m];
      detail::glue(S.patches, cm[i], static_cast<int>(S.patches[cm[i]].pieces.size()) - 1, nxt,
                   static_cast<int>(S.patches[nxt].pieces.size()) - 1, false);
    }
  }
  for (size_t i = 0; i < S.domains.size(); ++i)
    if (is_cyl(S.domains[i].kind)) {
      int ii = static_cast<int>(i);
      detail::glue(S.patches, ii, 0, ii, static_cast<int>(S.patches[i].pieces.size()) - 1, true);
    }

  detail::DisjointSets ds(static_cast<int>(S.domains.size()));
  int comps = static_cast<int>(S.domains.size());
  for (size_t i = 0; i < S.patches.size(); ++i)
    for (const Piece& p : S.patches[i].pieces)
      if (ds.unite(static_cast<int>(i), p.partner_patch)) --comps;
  if (comps != 1) throw Error(Errc::Disconnected, std::to_string(comps) + " components");

  S.complex = build_complex(S.patches, zeta);

  // Face boundary chains and poles.
  const int ne = datum.n;
  S.complex.faces.assign(face, std::vector<long long>(ne, 0));
  S.poles.assign(face, PoleRecord{0, Cx(0, 0)});
  for (const Domain& d : S.domains) {
    long long sign = is_plus(d.kind) ? 1 : -1;
    for (int l : d.labels) S.complex.faces[d.face][l - 1] += sign;
    if (!is_cyl(d.kind) && d.kind == DomainKind::DPlus) S.poles[d.face].order += 1;
  }
  for (size_t f = 0; f < S.poles.size(); ++f) {
    if (S.poles[f].order == 0)
      S.poles[f].order = 1;
    else
      S.poles[f].order += 1;
    for (int e = 0; e < ne; ++e)
      if (S.complex.faces[f][e]) S.poles[f].residue += zeta[e] * Rational(S.complex.faces[f][e]);
  }

  // Riemann-Roch against the Euler count.
  const int V = S.complex.num_vertices();
  const int s = static_cast<int>(S.poles.size());
  const int twice_g = ne - V - s + 2;
  int deg_sum = 0, ord_sum = 0;
  for (const auto& v : S.complex.vertices) deg_sum += v.degree;
  for (const auto& p : S.poles) ord_sum += p.order;
  if (twice_g < 0 || twice_g % 2 || deg_sum - ord_sum != twice_g - 2)
    throw Error(Errc::EulerMismatch, "degrees and pole orders disagree with n = 2g + r + s - 2");
  for (const auto& p : S.poles)
    if (p.order == 1 && p.residue.is_zero()) throw Error(Errc::Internal, "simple pole with zero residue");
  return S;
}

inline Surface assemble(const Datum& datum) { return assemble(datum, default_zeta(datum.n)); }

inline std::vector<int> singularity_degrees(const Surface& S) {
  std::vector<int> out;
  for (const auto& v : S.complex.vertices) out.push_back(v.degree);
  std::sort(out.begin(), out.end());
  return out;
}

inline const std::vector<PoleRecord>& pole_profile(const Surface& S) { return S.poles; }

inline Signature stratum_of(const Surface& S) {
  std::vector<int> orders;
  for (const auto& p : S.poles) orders.push_back(p.order);
  return Signature(singularity_degrees(S), orders);
}

inline int surface_genus(const Surface& S) {
  const int g = (S.datum.n - S.complex.num_vertices() - static_cast<int>(S.poles.size()) + 2) / 2;
  if (g != genus(stratum_of(S))) throw Error(Errc::EulerMismatch, "Euler genus disagrees with the stratum");
  return g;
}

inline Datum parallelogram_datum() {
  Datum x;
  x.n = 2;
  x.pi_t = {1, 2};
  x.pi_b = {2, 1};
  x.nplus = {0, 2};
  x.nminus = {0, 2};
  x.d_breaks = {0, 1};
  return x;
}

// D+(z1,z2) glued to D-(z2,z1).
inline Surface parallelogram_example(const Cx& z1, const Cx& z2) { return assemble(parallelogram_datum(), {z1, z2}); }

// One line per glued pair, stable across runs.
inline std::string gluing_table(const Surface& S) {
  std::string out;
  auto piece_name = [&](int d, int i) {
    const Domain& D = S.domains[d];
    std::string base = std::string(kind_name(D.kind)) + "_" + std::to_string(D.index) + ".";
    int k = static_cast<int>(D.labels.size());
    if (i == 0) return base + (is_cyl(D.kind) ? "left_vertical" : "left_line");
    if (i == k + 1) return base + (is_cyl(D.kind) ? "right_vertical" : "right_line");
    return base + "z" + std::to_string(D.labels[i - 1]);
  };
  for (size_t d = 0; d < S.patches.size(); ++d)
    for (size_t i = 0; i < S.patches[d].pieces.size(); ++i) {
      const Piece& p = S.patches[d].pieces[i];
      if (std::make_pair(p.partner_patch, p.partner_piece) < std::make_pair(static_cast<int>(d), static_cast<int>(i)))
        continue;
      out += piece_name(static_cast<int>(d), static_cast<int>(i)) + " <-> " +
             piece_name(p.partner_patch, p.partner_piece) + (p.flipped ? " (flipped)" : "") + "\n";
    }
  return out;
}

}  // namespace polestrata
