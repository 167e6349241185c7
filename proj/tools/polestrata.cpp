#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polestrata/classifier.hpp"
#include "polestrata/families.hpp"
#include "polestrata/geom.hpp"
#include "polestrata/homology.hpp"
#include "polestrata/io.hpp"
#include "polestrata/surgery.hpp"
#include "polestrata/svg.hpp"

using namespace polestrata;

namespace {

std::string cx_text(const Cx& z) { return to_string(z.re) + "," + to_string(z.im); }

std::string decimal(const Rational& q2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", std::sqrt(to_double(q2)));
  return buf;
}

std::string tuple_text(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

Surface load_surface(const std::string& path) {
  DatumFile f = load_datum(path);
  return assemble(f.datum, f.zeta);
}

int cmd_classify(std::ostream& out, const std::string& text, bool json) {
  Signature sig = parse_signature(text);
  auto comps = classify(sig);
  if (json) {
    Json j;
    j["schema"] = 1;
    j["stratum"] = to_string(sig);
    j["nonempty"] = !comps.empty() || is_nonempty(sig);
    Json arr = Json::array();
    for (const auto& c : comps) {
      Json e;
      e["label"] = label_name(c);
      if (c.label == Label::Rotation) e["rotation"] = c.rotation;
      e["notes"] = c.notes;
      arr.push_back(e);
    }
    j["components"] = arr;
    out << j.dump(2) << "\n";
    return 0;
  }
  if (comps.empty()) {
    out << "empty stratum\n";
    return 0;
  }
  for (const auto& c : comps) out << label_name(c) << "\t" << c.notes << "\n";
  return 0;
}

int cmd_build(std::ostream& out, const std::vector<int>& poles, const std::vector<int>& bubbles) {
  Datum x = realize_bubbles(poles, bubbles);
  std::vector<Cx> zeta = default_zeta(x.n);
  Surface S = assemble(x, zeta);
  Json j;
  j["schema"] = 1;
  j["stratum"] = to_string(stratum_of(S));
  Json body = datum_to_json(x, zeta);
  for (auto& [k, v] : body.items()) j[k] = v;
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_invariants(std::ostream& out, const std::string& path) {
  Surface S = load_surface(path);
  const Signature sig = stratum_of(S);
  const int g = surface_genus(S);
  out << "genus\t" << g << "\n";
  out << "stratum\t" << to_string(sig) << "\n";
  std::string res;
  for (size_t i = 0; i < S.poles.size(); ++i)
    res += (i ? " " : "") + std::string("p") + std::to_string(S.poles[i].order) + ":" + cx_text(S.poles[i].residue);
  out << "residues\t" << res << "\n";
  if (g == 1) {
    try {
      out << "rotation_number\t" << rotation_number(S) << "\n";
    } catch (const Error& e) {
      if (is_internal(e.code())) throw;
      out << "rotation_number\tunavailable " << errc_name(e.code()) << "\n";
    }
  }
  if (spin_defined(sig)) {
    try {
      out << "spin_parity\t" << spin_parity(S) << "\n";
    } catch (const Error& e) {
      if (is_internal(e.code())) throw;
      out << "spin_parity\tunavailable " << errc_name(e.code()) << "\n";
    }
  }
  out << "zippered_involution\t" << (has_zippered_involution(S.datum) ? "true" : "false") << "\n";
  return 0;
}

int cmd_oracle(std::ostream& out, const std::string& mode, const std::string& text, int threads) {
  Signature sig = parse_signature(text);
  if (mode == "pq") {
    PqReport R = pq_orbit_classes(sig, threads);
    out << "count\t" << R.orbits.size() << "\n";
    out << "label\tsize\trepresentative\n";
    for (const auto& o : R.orbits)
      out << "Rotation(" << o.label << ")\t" << o.size << "\t" << o.representative.first << ","
          << o.representative.second << "\n";
    return 0;
  }
  auto classes = component_classes(sig, {}, threads);
  const int g = genus(sig);
  const int n0 = sig.zeros[0] - 2 * g;
  out << "count\t" << classes.size() << "\n";
  out << "representative\tsize\n";
  for (const auto& c : classes) {
    ComponentTerm t{Signature({n0}, sig.poles), c.representative};
    out << to_string(t) << "\t" << c.members.size() << "\n";
  }
  return 0;
}

int cmd_census(std::ostream& out, const std::string& path, const std::string& bound, const std::string& kind,
               int threads) {
  Surface S = load_surface(path);
  CensusOptions opt;
  opt.bound = parse_rational(bound);
  opt.threads = threads;
  if (kind == "sc") {
    auto sc = saddle_connections(S, opt);
    out << "holonomy\tstart\tend\tlength2\tlength\n";
    for (const auto& s : sc)
      out << cx_text(s.holonomy) << "\t" << s.start << "\t" << s.end << "\t" << to_string(s.length2()) << "\t"
          << decimal(s.length2()) << "\n";
    return 0;
  }
  auto cy = cylinders(S, opt);
  out << "waist\tlength2\tlength\theight2\tbottom\ttop\n";
  for (const auto& c : cy)
    out << cx_text(c.waist) << "\t" << to_string(c.waist.norm2()) << "\t" << decimal(c.waist.norm2()) << "\t"
        << to_string(c.height2) << "\t" << tuple_text(c.bottom) << "\t" << tuple_text(c.top) << "\n";
  return 0;
}

int cmd_render(std::ostream& out, const std::string& path, const std::string& target) {
  Surface S = load_surface(path);
  std::string svg = render_svg(S);
  if (target.empty() || target == "-") {
    out << svg;
    return 0;
  }
  std::ofstream f(target, std::ios::binary);
  if (!f) throw Error(Errc::MalformedDatum, "cannot write " + target);
  f << svg;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Translation surfaces with poles: construction, invariants, classification, census"};
  app.require_subcommand(1);

  std::string sig_text, datum_path, mode, bound = "10", kind = "sc", out_path;
  std::vector<int> poles, bubbles;
  bool json = false;
  int threads = 1;

  auto* c_classify = app.add_subcommand("classify", "Connected components of a stratum");
  c_classify->add_option("stratum", sig_text, "Signature such as H(4,4,-1,-1)")->required();
  c_classify->add_flag("--json", json, "Machine-readable output");

  auto* c_build = app.add_subcommand("build", "Datum for a minimal base with bubbled handles");
  c_build->add_option("--poles", poles, "Pole orders")->required()->delimiter(',');
  c_build->add_option("--bubbles", bubbles, "Bubble parameters s_1,...,s_g")->delimiter(',');

  auto* c_inv = app.add_subcommand("invariants", "Flat invariants of an assembled surface");
  c_inv->add_option("--datum", datum_path, "Datum JSON file")->required();

  auto* c_oracle = app.add_subcommand("oracle", "Brute-force component count");
  c_oracle->add_option("--mode", mode, "pq or bubble")->required()->check(CLI::IsMember({"pq", "bubble"}));
  c_oracle->add_option("--stratum", sig_text, "Signature")->required();
  c_oracle->add_option("--threads", threads, "Worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);

  auto* c_census = app.add_subcommand("census", "Saddle connections or cylinders up to a length bound");
  c_census->add_option("--datum", datum_path, "Datum JSON file")->required();
  c_census->add_option("--bound", bound, "Length bound (rational)");
  c_census->add_option("--kind", kind, "sc or cyl")->check(CLI::IsMember({"sc", "cyl"}));
  c_census->add_option("--threads", threads, "Worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);

  auto* c_render = app.add_subcommand("render", "SVG picture of the domains");
  c_render->add_option("--datum", datum_path, "Datum JSON file")->required();
  c_render->add_option("--out", out_path, "Output file, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::ostringstream out;
  int rc = 0;
  try {
    if (*c_classify) rc = cmd_classify(out, sig_text, json);
    else if (*c_build) rc = cmd_build(out, poles, bubbles);
    else if (*c_inv) rc = cmd_invariants(out, datum_path);
    else if (*c_oracle) rc = cmd_oracle(out, mode, sig_text, threads);
    else if (*c_census) rc = cmd_census(out, datum_path, bound, kind, threads);
    else if (*c_render) rc = cmd_render(out, datum_path, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_internal(e.code()) ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  std::cout << out.str();
  return rc;
}
