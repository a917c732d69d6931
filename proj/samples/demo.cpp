// Computes a weight enumerator through the triangular representation and
// through the perfect-matching reduction, and prints both next to direct
// enumeration.

#include <fstream>
#include <iostream>

#include "trirep/trirep.hpp"

int main(int argc, char** argv) {
  using namespace trirep;
  try {
    BinaryCode code = BinaryCode::from_strings({"110", "011"});
    if (argc > 1) {
      std::ifstream in(argv[1]);
      if (!in) {
        std::cerr << "cannot open " << argv[1] << '\n';
        return 2;
      }
      code = BinaryCode::parse(in);
    }

    const PipelineResult result = pipeline(code);
    const Representation& rep = result.representation;
    std::cout << "direct      " << code.weight_enumerator() << '\n';
    std::cout << "geometric   " << result.weight_enumerator << '\n';
    std::cout << "kernel      " << result.kernel_enumerator << "  (e = " << *rep.exponent
              << ", " << rep.config.triangle_count() << " triangles)\n";

    const MatchingInstance inst = reduce(rep.config);
    if (inst.config.triangle_count() <= kMaxMatchingTriangles) {
      std::cout << "matchings   " << pm_weight_enumerator(inst.config, inst.weights) << "  ("
                << inst.config.triangle_count() << " triangles)\n";
    }
  } catch (const Error& e) {
    std::cerr << "ERROR " << to_string(e.code()) << ' ' << e.what() << '\n';
    return 2;
  }
  return 0;
}
