#pragma once

#include "krc/plactic.hpp"
#include "krc/tableau.hpp"

namespace krc {

// Decomposition of a classical-legal tableau into the boxes the colors
// 2..n never touch (leading 1's, the maximal null-configuration,
// trailing 1-bars) and the skew remainder.
struct Strip {
  int r1 = 0;  // leading 1's outside the null-configuration
  int r2 = 0;  // null-configuration size (columns)
  int r3 = 0;  // trailing 1-bars outside the null-configuration
  SkewTableau skew;

  int t1() const { return r1 + r2; }
  int t2() const { return r2 + r3; }
};

Strip strip(const Tableau& t);

// Inverse of strip at a prescribed width: reinserts t1-r2 one's, a
// null-configuration of r2 = max(0, t1+t2-width) columns and t2-r2
// one-bars around the skew.
Tableau refill(const SkewTableau& skew, int width, int t1, int t2);

// Null-configuration of size k as a width-k tableau block.
Tableau null_configuration(int n, int k);

struct ReducedForm {
  Strip parts;
  SkewTableau reduced;  // completely reduced (straight) form
  Partition shape;      // its shape
  int rank;             // width - t1 + t2
};

ReducedForm reduced_form(const Tableau& t);

}  // namespace krc
