#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "krc/branching.hpp"
#include "krc/classical_crystal.hpp"
#include "krc/shape_maps.hpp"
#include "krc/tableau.hpp"
#include "krc/weights.hpp"

namespace krc {

// The affine crystal on T(s): classical colors act through drop/fill,
// color 0 acts as sigma f1 sigma.
struct AffineCrystal {
  int n = 4;
  int s = 1;

  std::vector<Tableau> filled;   // vertex id -> width-s tableau
  std::vector<Tableau> dropped;  // vertex id -> dropped form
  std::vector<int> component;    // vertex id -> k
  std::map<Tableau, int> index;  // filled tableau -> vertex id

  // f[i][v], e[i][v]: target vertex or -1 (colors 0..n).
  std::vector<std::vector<int>> f, e;
  // eps[i][v], phi[i][v]: string lengths per color.
  std::vector<std::vector<int>> eps, phi;

  BranchingGraph bc;
  std::vector<int> bc_of;                       // vertex -> bc vertex
  std::vector<int> path_parent, path_color;     // D_{n-1} BFS tree from each hw
  std::vector<int> ell_of;                      // minimal ell with iota_k^ell != 0
  std::vector<int> sigma_of;                    // the involution sigma

  int size() const { return static_cast<int>(filled.size()); }
  int vertex_of(const Tableau& t) const;
  int hw_vertex(int k) const;  // vertex of u_k

  AffineWeight eps_weight(int v) const;
  AffineWeight phi_weight(int v) const;
  AffineWeight wt(int v) const;  // phi - eps, level 0
};

AffineCrystal assemble(int n, int s, std::size_t budget = kDefaultBudget);

// JSON export; energies may be null (see tools documentation).
std::string crystal_json(const AffineCrystal& c, const std::vector<int>* energy);
std::string crystal_dot(const AffineCrystal& c);

}  // namespace krc
