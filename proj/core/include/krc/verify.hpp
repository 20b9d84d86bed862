#pragma once

#include <string>
#include <vector>

#include "krc/affine_crystal.hpp"
#include "krc/energy.hpp"

namespace krc {

struct CheckResult {
  std::string criterion;
  std::string verdict;  // "pass" | "fail" | "assumed"
  std::string witness;

  bool passed() const { return verdict != "fail"; }
};

struct Report {
  std::vector<CheckResult> items;
  bool all_pass() const;
  std::string to_json() const;  // [{"criterion", "verdict", "witness"}...]
};

// Crystal axioms for every color 0..n: mutual inverse arrows, weight
// shifts by alpha_i, string lengths against the content weight, level 0.
Report check_axioms(const AffineCrystal& c);

// Vertices of minimal <c, eps(b)>.
std::vector<int> b_min(const AffineCrystal& c);

// Perfectness criteria 1, 2, 4, 5 (3 is recorded as assumed).
Report check_perfect(const AffineCrystal& c);

// Minimal tableau with eps = phi = lambda, built middle-out and pushed
// through fill and iota.
Tableau construct_minimal(const AffineWeight& lambda, int n, int s);

// The constructed family reproduces b_min exactly.
bool check_minimal_set(const AffineCrystal& c, const std::vector<Tableau>& constructed);
std::vector<Tableau> construct_minimal_family(const AffineCrystal& c);

// Block decomposition T1..T5 of a width-s tableau.
struct BlockDecomposition {
  int k1 = 0, k2 = 0, k3 = 0, k4 = 0, k5 = 0;
};
BlockDecomposition block_decomposition(const Tableau& t);

// Structural facts: level lower bound, block widths and column
// exclusions on minimal elements, the balance counts, the iota
// statistic shifts, the rank behaviour of f0 and sigma, and the weight
// swap under sigma.
Report check_structure_lemmas(const AffineCrystal& c);

// Every verify check in one report (used by the CLI).
Report verify_all(const AffineCrystal& c);

}  // namespace krc
