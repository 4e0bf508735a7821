// Minimal library walkthrough: build both preset algebras at m = 2, print
// dimensions and Cartan matrices, and run one syzygy orbit.

#include <iostream>

#include "quivalg/presets.hpp"
#include "quivalg/rep.hpp"
#include "quivalg/rewrite.hpp"

int main() {
  using namespace quivalg;
  Rationals f;
  auto lambda = f.one();

  auto sp = spherical_presentation(f, 2, lambda);
  auto S = build_algebra(f, sp.quiver, sp.relations, sp.default_degree_cap);
  std::cout << "spherical m=2: dim = " << S.dim() << "\n";

  auto tp = tetrahedral_presentation(f, 2, lambda);
  auto L = build_algebra(f, tp.presentation.quiver, tp.presentation.relations,
                         tp.presentation.default_degree_cap);
  std::cout << "tetrahedral m=2: dim = " << L.dim() << "\n";

  std::cout << "Cartan of the spherical algebra (C[i][j] = dim e_i A e_j):\n";
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) std::cout << S.block(i, j).size() << " ";
    std::cout << "\n";
  }

  std::cout << "syzygy orbit of the simple at vertex 1 over the spherical algebra:\n";
  for (const auto& step : omega_orbit(S, 0, 4)) {
    std::cout << "  (";
    for (size_t k = 0; k < step.dim_vector.size(); ++k)
      std::cout << (k ? "," : "") << step.dim_vector[k];
    std::cout << ")" << (step.isomorphic_to_start ? "  ~ simple" : "") << "\n";
  }
  return 0;
}
