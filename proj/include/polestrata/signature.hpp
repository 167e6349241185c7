#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <vector>

#include "polestrata/error.hpp"
#include "polestrata/exact.hpp"

namespace polestrata {

// Pole orders are stored positive; the minus sign only exists in text.
struct Signature {
  std::vector<int> zeros;
  std::vector<int> poles;

  Signature() = default;
  Signature(std::vector<int> z, std::vector<int> p) : zeros(std::move(z)), poles(std::move(p)) {
    std::sort(zeros.begin(), zeros.end());
    std::sort(poles.begin(), poles.end());
  }

  int zero_sum() const { return std::accumulate(zeros.begin(), zeros.end(), 0); }
  int pole_sum() const { return std::accumulate(poles.begin(), poles.end(), 0); }
  bool operator==(const Signature& o) const { return zeros == o.zeros && poles == o.poles; }
  bool operator<(const Signature& o) const {
    return zeros != o.zeros ? zeros < o.zeros : poles < o.poles;
  }
};

inline bool well_formed(const Signature& s) {
  if (s.poles.empty()) return false;
  for (int z : s.zeros)
    if (z < 0) return false;
  for (int p : s.poles)
    if (p < 1) return false;
  int diff = s.zero_sum() - s.pole_sum();
  return diff % 2 == 0 && diff >= -2;
}

inline int genus(const Signature& s) {
  if (!well_formed(s)) throw Error(Errc::MalformedSignature, "genus is not a nonnegative integer");
  return (s.zero_sum() - s.pole_sum() + 2) / 2;
}

inline bool is_nonempty(const Signature& s) {
  genus(s);
  return s.pole_sum() > 1;
}

inline int degree_gcd(const Signature& s) {
  long long g = 0;
  for (int z : s.zeros) g = gcd_ll(g, z);
  for (int p : s.poles) g = gcd_ll(g, p);
  return static_cast<int>(g == 0 ? 1 : g);
}

namespace detail {
// {2m} or {m,m} with m >= 1.
inline bool doubled_or_pair(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  if (v.size() == 1) return v[0] >= 2 && v[0] % 2 == 0;
  if (v.size() == 2) return v[0] >= 1 && v[0] == v[1];
  return false;
}
}  // namespace detail

inline bool is_hyperelliptic_type(const Signature& s) {
  return detail::doubled_or_pair(s.zeros) && detail::doubled_or_pair(s.poles);
}

inline bool is_even_type(const Signature& s) {
  for (int z : s.zeros)
    if (z % 2) return false;
  bool poles_even = std::all_of(s.poles.begin(), s.poles.end(), [](int p) { return p % 2 == 0; });
  std::vector<int> p = s.poles;
  std::sort(p.begin(), p.end());
  return poles_even || p == std::vector<int>{1, 1};
}

inline bool is_minimal(const Signature& s) { return s.zeros.size() == 1; }

inline std::string to_string(const Signature& s) {
  std::string out = "H(";
  bool first = true;
  for (int z : s.zeros) {
    out += (first ? "" : ",") + std::to_string(z);
    first = false;
  }
  for (int p : s.poles) {
    out += (first ? "" : ",") + std::string("-") + std::to_string(p);
    first = false;
  }
  return out + ")";
}

// "H(4,4,-1,-1)", whitespace-insensitive.
inline Signature parse_signature(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  auto bad = [&](const std::string& why) {
    return Error(Errc::MalformedSignature, "'" + text + "': " + why);
  };
  if (t.size() < 3 || t[0] != 'H' || t[1] != '(' || t.back() != ')') throw bad("expected H(...)");
  std::string body = t.substr(2, t.size() - 3);
  if (body.empty()) throw bad("no entries");
  std::vector<int> zeros, poles;
  size_t pos = 0;
  while (true) {
    size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t i = (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) ? 1 : 0;
    if (i >= tok.size() || tok.size() - i > 9) throw bad("bad entry '" + tok + "'");
    for (size_t j = i; j < tok.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(tok[j]))) throw bad("bad entry '" + tok + "'");
    int v = std::stoi(tok);
    if (tok[0] == '-') {
      if (v == 0) throw bad("pole of order 0");
      poles.push_back(-v);
    } else {
      zeros.push_back(v);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  Signature s(zeros, poles);
  if (!well_formed(s)) throw bad("not a stratum of meromorphic differentials");
  return s;
}

}  // namespace polestrata
