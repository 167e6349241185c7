// Assemble a datum file and print its stratum, residues and invariants.
// Usage: sample_invariants [datum.json]

#include <iostream>

#include "polestrata/classifier.hpp"
#include "polestrata/geom.hpp"
#include "polestrata/homology.hpp"
#include "polestrata/io.hpp"

using namespace polestrata;

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : "samples/fig_pole3.json";
  try {
    DatumFile f = load_datum(path);
    Surface S = assemble(f.datum, f.zeta);
    Signature sig = stratum_of(S);
    std::cout << "stratum " << to_string(sig) << ", genus " << surface_genus(S) << "\n";
    for (const auto& p : S.poles) std::cout << "  pole of order " << p.order << ", residue " << to_string(p.residue) << "\n";
    if (surface_genus(S) == 1) std::cout << "rotation number " << rotation_number(S) << "\n";
    if (spin_defined(sig)) std::cout << "spin parity " << spin_parity(S) << "\n";
    std::cout << "components of the stratum:";
    for (const auto& c : classify(sig)) std::cout << " " << label_name(c);
    std::cout << "\n";
    auto sc = saddle_connections(S, 4);
    std::cout << sc.size() << " saddle connections of length <= 4\n";
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
