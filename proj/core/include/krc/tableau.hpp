#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "krc/letters.hpp"
#include "krc/weights.hpp"

namespace krc {

struct Column {
  Letter top;
  Letter bottom;
  friend auto operator<=>(const Column&, const Column&) = default;
};

// Two-row rectangular tableau of shape (k, k) over the D_n alphabet.
// The empty tableau (width 0) is a legal value.
struct Tableau {
  int n = 4;
  std::vector<Letter> top;
  std::vector<Letter> bottom;

  int width() const { return static_cast<int>(top.size()); }
  bool empty() const { return top.empty(); }
  Column col(int i) const { return {top[i], bottom[i]}; }

  friend auto operator<=>(const Tableau&, const Tableau&) = default;
};

Tableau make_tableau(int n, std::vector<Letter> top, std::vector<Letter> bottom);

// Column word b1 a1 b2 a2 ... b_k a_k (bottom of a column before its top).
std::vector<Letter> column_word(const Tableau& t);

// Word position -> (column, is_top) and back.
inline int word_column(int pos) { return pos / 2; }
inline bool word_is_top(int pos) { return pos % 2 == 1; }

ClassicalWeight weight(const Tableau& t);

// The individual conditions of the classical legality criterion.
bool rows_weakly_increase(const Tableau& t);   // condition 1
bool columns_admissible(const Tableau& t);     // condition 2: bottom "not <=" top
bool no_aa_configuration(const Tableau& t);    // condition 3
bool no_n_bridge(const Tableau& t);            // condition 4 (possibly distant columns)
bool no_n_bridge_adjacent(const Tableau& t);   // condition 4a (adjacent columns only)
bool no_one_onebar_column(const Tableau& t);   // condition 5

bool classical_legal(const Tableau& t);        // conditions 1-5
bool in_T_s(const Tableau& t, int s);          // width s plus conditions 1, 2, 4

// Two-row skew tableau: the top row occupies columns top_offset+1 ..
// top_offset+|top|, the bottom row columns 1 .. |bottom|.
struct SkewTableau {
  int n = 4;
  int top_offset = 0;
  std::vector<Letter> top;
  std::vector<Letter> bottom;

  int top_size() const { return static_cast<int>(top.size()); }
  int bottom_size() const { return static_cast<int>(bottom.size()); }
  // 1-based column accessors; 0 means "no cell".
  Letter top_at(int col) const {
    int i = col - top_offset;
    return (i >= 1 && i <= top_size()) ? top[i - 1] : 0;
  }
  Letter bottom_at(int col) const {
    return (col >= 1 && col <= bottom_size()) ? bottom[col - 1] : 0;
  }
  bool straight() const { return top_offset == 0 && bottom_size() <= top_size(); }

  friend auto operator<=>(const SkewTableau&, const SkewTableau&) = default;
};

// Throws if rows are not weakly increasing or an overlapping column is
// illegal.
void check_skew(const SkewTableau& s);
bool skew_valid(const SkewTableau& s);

// Column word of a skew tableau, reading columns left to right, bottom
// cell before top cell.
std::vector<Letter> skew_word(const SkewTableau& s);

SkewTableau as_skew(const Tableau& t);
Tableau skew_to_tableau(const SkewTableau& s);  // requires straight (k, k)

struct Partition {
  int p1 = 0;
  int p2 = 0;
  int size() const { return p1 + p2; }
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

std::string partition_str(const Partition& p);

// {"n": int, "top": [int...], "bottom": [int...]}
std::string tableau_json(const Tableau& t);
Tableau tableau_from_json(const std::string& text);

// Two-line rendering with barred letters overlined.
std::string tableau_pretty(const Tableau& t);
std::string skew_pretty(const SkewTableau& s);

}  // namespace krc
