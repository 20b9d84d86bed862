#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "krc/tableau.hpp"
#include "krc/word_ops.hpp"

namespace krc {

inline constexpr std::size_t kDefaultBudget = 2'000'000;

struct BudgetError : Error {
  using Error::Error;
};

// Kashiwara operators on a rectangular two-row tableau via its column
// word.
std::optional<Tableau> tab_f(int i, const Tableau& t);
std::optional<Tableau> tab_e(int i, const Tableau& t);

bool is_classical_hw(const Tableau& t);

// u_k = (1/2)^k, the highest weight tableau of B(k varpi_2).
Tableau highest_weight_tableau(int n, int k);

// Diagram automorphism tied to the longest Weyl element: identity for
// even n, swaps n-1 and n for odd n.
int tau(int i, int n);

// Letter involution of the dual map on B(varpi_1).
Letter star_letter(Letter x, int n);

// Dual map: star the reversed column word and rectify.  Implemented by
// rotating the tableau half a turn and rectifying the resulting skew.
Tableau dual_star(const Tableau& t);
SkewTableau dual_star_two_row(const SkewTableau& s);

// A classical component B(k varpi_2) generated by f-closure from u_k.
// Vertex 0 is u_k; ordering is BFS with colors ascending, so it is
// deterministic.
struct ClassicalComponent {
  int n = 4;
  int k = 0;
  std::vector<Tableau> vertices;
  std::map<Tableau, int> index;
  // f[i][v] / e[i][v] = target vertex or -1, colors 1..n (slot 0 unused).
  std::vector<std::vector<int>> f, e;

  int size() const { return static_cast<int>(vertices.size()); }
};

ClassicalComponent generate_component(int n, int k,
                                      std::size_t budget = kDefaultBudget);

// DOT with edges labeled by color.
std::string component_dot(const ClassicalComponent& c);

}  // namespace krc
