// H(3,4) and the Doob graph Shrikhande x K4 share the intersection array
// {9,6,3;1,2,3}, so every array-level test treats them alike. Only the clique
// search on the graphs themselves tells them apart.

#include <iostream>
#include <variant>

#include "drg/drg.hpp"

int main() {
  using namespace drg;

  const IntersectionArray ia = parse_array("{9,6,3;1,2,3}");
  const Spectrum spec = eigenvalues(ia);
  std::cout << "array " << format_array(ia) << ", theta_D = " << spec.theta_min().str() << "\n";
  if (auto sol = solve_geometric_parameters(ia, spec, 3); auto* s = std::get_if<GeometricSolution>(&sol))
    std::cout << "pseudo-geometric: tau_2 = " << s->tau_at(2) << ", psi_1 = " << s->psi_at(1) << "\n\n";

  for (const Graph& g : {hamming(3, 4), doob(1, 1)}) {
    std::cout << g.label() << ": " << g.n() << " vertices\n";
    auto drg = is_distance_regular(g);
    if (auto* w = std::get_if<Witness>(&drg)) {
      std::cout << "  not distance-regular: " << w->detail << "\n";
      continue;
    }
    std::cout << "  array " << format_array(std::get<IntersectionArray>(drg)) << "\n";
    std::cout << "  Delsarte 4-cliques: " << delsarte_cliques(g, 4).size() << "\n";

    const CoverOutcome res = geometric_cover(g, ia, spec);
    if (auto* c = std::get_if<CliqueCover>(&res)) {
      std::cout << "  geometric, " << c->cliques.size() << " lines\n";
    } else if (auto* cert = std::get_if<NonGeometricCertificate>(&res)) {
      std::cout << "  not geometric: " << cert->reason << "\n";
    } else {
      std::cout << "  undecided: " << std::get<Undecided>(res).reason << "\n";
    }
  }
}
