#pragma once

#include <string>
#include <utility>
#include <vector>

#include "krc/reduced_form.hpp"
#include "krc/tableau.hpp"

namespace krc {

struct AffineCrystal;

// A connected component of the crystal under colors 2..n, labelled by
// the shape of its completely reduced form.
struct BranchingVertex {
  int component = 0;       // classical component k
  Partition shape;
  int rank = 0;            // R(v) = r_k(v) + s - k
  int hw = -1;             // the D_{n-1} highest weight crystal vertex
  std::vector<int> members;
  int complement = -1;     // vertex of the same shape/component, rank 2s - R
};

struct BranchingGraph {
  std::vector<BranchingVertex> vertices;
  std::vector<std::pair<int, int>> edges;  // induced by color-1 arrows
};

// Partitions the crystal into D_{n-1} components, assigns shapes,
// ranks, complements and the per-vertex operator paths used to replay
// the local dual.
void build_branching(AffineCrystal& c);

// Replays the operator path from the D_{n-1} highest weight vector over
// the complementary vertex.
int star_bc(const AffineCrystal& c, int v);

// sigma(T) = iota_k^{s+ell-k}(T^{*BC}); requires ell_of.
int sigma_vertex(const AffineCrystal& c, int v);

// DOT export with one rank per layer.
std::string bc_dot(const AffineCrystal& c);

}  // namespace krc
