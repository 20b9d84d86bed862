#pragma once

#include <optional>
#include <vector>

#include "krc/tableau.hpp"

namespace krc {

// Raised when a sliding step reaches a configuration not covered by the
// supported two-row relations.  Never silently falls back.
struct NoRuleError : Error {
  using Error::Error;
};

// Column words are written leftmost-first:
// w = x_L x_{L-1} ... x_1 with x_{i+1} "not <=" x_i, i.e. adjacent
// vector entries satisfy !leq(w[j], w[j+1]).  Only n and n-bar may
// repeat.
bool is_column_word(const std::vector<Letter>& w, int n);

// #{x in C : x <= z or x >= z-bar} for unbarred z.
int column_count_N(const std::vector<Letter>& w, Letter z, int n);

bool is_admissible(const std::vector<Letter>& w, int n);

// Relation (5): erase the pair (z, z-bar) for the lowest unbarred z
// with N(z) > z; a consecutive (n, n-bar) pair when z = n.  Throws if
// the word is admissible.
std::vector<Letter> column_reduce(const std::vector<Letter>& w, int n);

// How often column_reduce has run; the drop/fill/iota pipelines are
// expected to keep this at zero.
long column_reduce_invocations();
void reset_column_reduce_invocations();

// Rectifies a two-row skew tableau to straight shape with the
// jeu-de-taquin specializations of the type D relations.  Letters may
// change during slides (relations (2) and (4)).  The representation has
// a single inner corner per shape, so slides are processed left to
// right by construction.
SkewTableau rectify_two_row(SkewTableau s);

// One outward slide: the top row moves one column to the right, the
// bottom row stays put.  Used by the component embeddings.
SkewTableau slide_out_once(const SkewTableau& s);

// One inward slide: the top row moves one column to the left.  Returns
// nullopt when a vertical move would be forced, i.e. the input is not
// in the image of slide_out_once.
std::optional<SkewTableau> slide_in_once(const SkewTableau& s);

}  // namespace krc
