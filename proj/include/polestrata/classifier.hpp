#pragma once

#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "polestrata/families.hpp"
#include "polestrata/homology.hpp"
#include "polestrata/signature.hpp"
#include "polestrata/surgery.hpp"

namespace polestrata {

enum class Label { Hyperelliptic, SpinEven, SpinOdd, Rotation, Unique, NonHyperelliptic };

struct ComponentDescriptor {
  Label label;
  int rotation = 0;
  std::string notes;

  bool operator==(const ComponentDescriptor& o) const { return label == o.label && rotation == o.rotation; }
};

inline std::string label_name(const ComponentDescriptor& c) {
  switch (c.label) {
    case Label::Hyperelliptic: return "Hyperelliptic";
    case Label::SpinEven: return "SpinEven";
    case Label::SpinOdd: return "SpinOdd";
    case Label::Rotation: return "Rotation(" + std::to_string(c.rotation) + ")";
    case Label::Unique: return "Unique";
    case Label::NonHyperelliptic: return "NonHyperelliptic";
  }
  return "?";
}

inline std::vector<int> divisors(int d) {
  std::vector<int> out;
  for (int k = 1; k <= d; ++k)
    if (d % k == 0) out.push_back(k);
  return out;
}

namespace detail {

inline std::vector<ComponentDescriptor> hyp_plus_rest(const Signature& sig, bool hyp) {
  std::vector<ComponentDescriptor> out;
  if (hyp) out.push_back({Label::Hyperelliptic, 0, "every surface has an involution with sphere quotient"});
  if (is_even_type(sig)) {
    out.push_back({Label::SpinEven, 0, "spin parity 0"});
    out.push_back({Label::SpinOdd, 0, "spin parity 1"});
  } else if (hyp) {
    out.push_back({Label::NonHyperelliptic, 0, "no spin invariant"});
  } else {
    out.push_back({Label::Unique, 0, "connected"});
  }
  return out;
}

inline std::vector<ComponentDescriptor> genus2_simple_pair() {
  return {{Label::Hyperelliptic, 0, "coincides with one spin parity class"},
          {Label::NonHyperelliptic, 0, "coincides with the other spin parity class"}};
}

// Case table for one zero and genus >= 2.
inline std::vector<ComponentDescriptor> classify_minimal(const Signature& sig, int g) {
  const int n = sig.zeros[0];
  const auto& P = sig.poles;
  const int s = static_cast<int>(P.size());
  if (n % 2) return {{Label::Unique, 0, "connected"}};
  const bool pair = s == 2 && P[0] == P[1];
  if (s == 1) {
    if (g == 2 && P[0] == 2) return genus2_simple_pair();
    return hyp_plus_rest(sig, true);
  }
  if (pair && P[0] % 2 == 0) return hyp_plus_rest(sig, true);
  if (pair && P[0] == 1) {
    if (g > 2) return hyp_plus_rest(sig, true);
    return genus2_simple_pair();
  }
  if (pair) return {{Label::Hyperelliptic, 0, "every surface has an involution with sphere quotient"},
                    {Label::NonHyperelliptic, 0, "no spin invariant"}};
  bool all_even = std::all_of(P.begin(), P.end(), [](int p) { return p % 2 == 0; });
  if (all_even)
    return {{Label::SpinEven, 0, "spin parity 0"}, {Label::SpinOdd, 0, "spin parity 1"}};
  return {{Label::Unique, 0, "connected"}};
}

// General genus >= 2 decision tree, in the order the cases are stated.
inline std::vector<ComponentDescriptor> classify_general(const Signature& sig, int g) {
  const int sp = sig.pole_sum();
  if (sp % 2 == 1) return {{Label::Unique, 0, "connected"}};
  if (sp == 2 && g == 2) {
    if (is_hyperelliptic_type(sig)) return genus2_simple_pair();
    return {{Label::Unique, 0, "connected"}};
  }
  return hyp_plus_rest(sig, is_hyperelliptic_type(sig));
}

}  // namespace detail

inline std::vector<ComponentDescriptor> classify(const Signature& sig) {
  if (!well_formed(sig)) throw Error(Errc::MalformedSignature, to_string(sig));
  if (sig.zeros.empty()) throw Error(Errc::MalformedSignature, "no zeros");
  for (int z : sig.zeros)
    if (z < 1) throw Error(Errc::MalformedSignature, "zero of degree " + std::to_string(z));
  if (!is_nonempty(sig)) return {};
  const int g = genus(sig);
  if (g == 0) return {{Label::Unique, 0, "genus 0 strata are connected"}};
  if (g == 1) {
    const int d = degree_gcd(sig);
    const bool single = sig.zeros.size() == 1 && sig.poles.size() == 1;
    std::vector<ComponentDescriptor> out;
    for (int k : divisors(d)) {
      if (single && k == sig.zeros[0]) continue;
      out.push_back({Label::Rotation, k, "rotation number " + std::to_string(k)});
    }
    return out;
  }
  if (is_minimal(sig)) return detail::classify_minimal(sig, g);
  return detail::classify_general(sig, g);
}

inline std::vector<ComponentDescriptor> classify(const std::string& text) { return classify(parse_signature(text)); }

struct OracleResult {
  std::string oracle;
  long long expected;  // from classify
  long long observed;
  bool agree;
  std::string detail;
};

struct CrossCheckReport {
  Signature sig;
  std::vector<OracleResult> results;
  std::optional<Errc> error;  // BudgetExceeded leaves a partial report

  bool all_agree() const {
    return !error && std::all_of(results.begin(), results.end(), [](const OracleResult& r) { return r.agree; });
  }
};

struct Budget {
  long long max_states = 2'000'000;
  double seconds = 60;
};

inline CrossCheckReport cross_check(const Signature& sig, const Budget& budget = {}, int threads = 1) {
  CrossCheckReport R{sig, {}, std::nullopt};
  const auto t0 = std::chrono::steady_clock::now();
  auto over_time = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() > budget.seconds;
  };
  const auto comps = classify(sig);
  if (comps.empty() || genus(sig) == 0) return R;
  const int g = genus(sig);
  const long long expected = static_cast<long long>(comps.size());
  if (g == 1) {
    const int M = std::max(*std::max_element(sig.zeros.begin(), sig.zeros.end()),
                           *std::max_element(sig.poles.begin(), sig.poles.end()));
    if (static_cast<long long>(M) * M > budget.max_states) {
      R.error = Errc::BudgetExceeded;
      return R;
    }
    PqReport pq = pq_orbit_classes(sig, threads);
    std::set<int> labels, want;
    bool constant = true;
    for (const auto& o : pq.orbits) {
      labels.insert(o.label);
      constant = constant && o.label_constant;
    }
    for (const auto& c : comps) want.insert(c.rotation);
    R.results.push_back({"pq", expected, static_cast<long long>(pq.orbits.size()),
                         static_cast<long long>(pq.orbits.size()) == expected && labels == want && constant,
                         "modulus " + std::to_string(pq.modulus)});
    if (is_minimal(sig)) {
      std::set<int> rots;
      const int n = sig.zeros[0];
      for (int k = 1; k < n; ++k) {
        if (over_time()) {
          R.error = Errc::BudgetExceeded;
          return R;
        }
        BubbledFamily F = bubbled_torus(k, sig.poles);
        rots.insert(static_cast<int>(rotation_number(assemble(F.datum, F.zeta))));
      }
      R.results.push_back({"rotation", expected, static_cast<long long>(rots.size()), rots == want, "bubbled handles"});
    }
    return R;
  }
  if (is_minimal(sig)) {
    long long states = 1;
    const int n0 = sig.zeros[0] - 2 * g;
    for (int i = 0; i < g; ++i) states *= n0 + 2 * i + 1;
    if (states > budget.max_states) {
      R.error = Errc::BudgetExceeded;
      return R;
    }
    auto classes = component_classes(sig, {}, threads);
    R.results.push_back({"bubble", expected, static_cast<long long>(classes.size()),
                         static_cast<long long>(classes.size()) == expected, std::to_string(states) + " tuples"});
  }
  return R;
}

}  // namespace polestrata
