#pragma once

#include <optional>

#include "krc/reduced_form.hpp"
#include "krc/tableau.hpp"

namespace krc {

struct AConfiguration {
  Letter a = 0;
  int m = 0;       // columns removed by the drop map
  int start = 0;   // first removed column (0-based)
  int variant = 0; // 1: shares its top on the left, 2: shares its bar on
                   // the right, 3: free-standing run of m+1
};

// The unique maximal a-configuration of T in T(s); nullopt iff T is
// classical-legal or T = (1/1-bar)^s.
std::optional<AConfiguration> find_a_configuration(const Tableau& t, int s);

struct DropResult {
  Tableau dropped;
  int k = 0;  // classical component index = resulting width
};

// Height-two drop map T(s) -> direct sum of B(k varpi_2).
DropResult drop(const Tableau& t, int s);

// Interior filling locations of t (Criterion on b_i <= bar(a_i) <=
// b_{i+1} or a_i <= bar(b_{i+1}) <= a_{i+1}); index i means "between
// columns i and i+1", 1-based.
std::vector<int> filling_locations(const Tableau& t);

// Height-two fill map: inserts s - width(t) repeated columns at the
// first filling location, or appends/prepends when none exists.
Tableau fill(const Tableau& t, int s);

// F_{2,s} after D_{2,s'}: the inclusion of T(s') into T(s).
Tableau upsilon(const Tableau& t, int s_from, int s_to);

// iota_i^j on width-s filled tableaux: the unique embedding of the
// component B(i varpi_2) into B(j varpi_2) for j > i, its partial
// inverse for j < i (nullopt encodes 0), the identity for i == j.
std::optional<Tableau> iota(const Tableau& t, int i, int j, int s);

// Trace of the five algorithm steps for j > i, for example replays.
struct IotaTrace {
  Tableau after_drop;
  SkewTableau stripped;
  SkewTableau slid;
  Tableau refilled;
  Tableau result;
};
IotaTrace iota_up_trace(const Tableau& t, int i, int j, int s);

}  // namespace krc
