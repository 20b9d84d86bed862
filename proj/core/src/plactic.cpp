#include "krc/plactic.hpp"

#include <algorithm>
#include <atomic>

namespace krc {

namespace {

std::atomic<long> g_column_reduce_count{0};

// 1-indexed working grid for slides; 0 marks an empty cell.
struct Grid {
  int n = 4;
  std::vector<Letter> top, bot;

  explicit Grid(const SkewTableau& s) : n(s.n) {
    int width = std::max(s.top_offset + s.top_size(), s.bottom_size()) + 2;
    top.assign(width + 2, 0);
    bot.assign(width + 2, 0);
    for (int i = 0; i < s.top_size(); ++i) top[s.top_offset + 1 + i] = s.top[i];
    for (int i = 0; i < s.bottom_size(); ++i) bot[1 + i] = s.bottom[i];
  }

  Letter top_at(int c) const {
    return (c >= 1 && c < static_cast<int>(top.size())) ? top[c] : 0;
  }
  Letter bot_at(int c) const {
    return (c >= 1 && c < static_cast<int>(bot.size())) ? bot[c] : 0;
  }

  SkewTableau to_skew() const {
    SkewTableau s;
    s.n = n;
    int first_top = 0;
    for (int c = 1; c < static_cast<int>(top.size()); ++c)
      if (top[c]) {
        first_top = c;
        break;
      }
    s.top_offset = first_top ? first_top - 1 : 0;
    for (int c = first_top; first_top && c < static_cast<int>(top.size()) && top[c]; ++c)
      s.top.push_back(top[c]);
    for (int c = 1; c < static_cast<int>(bot.size()) && bot[c]; ++c)
      s.bottom.push_back(bot[c]);
    // An empty top row has no intrinsic offset; pin it so comparisons
    // and the shape check behave.
    if (s.top.empty()) s.top_offset = s.bottom_size();
    return s;
  }
};

// One full inward jeu-de-taquin slide starting from a hole in the top
// row at column c.  Local rules, with B = cell under the hole, R = cell
// right of the hole, BR = cell under R:
//   - B <= R            : vertical move (B up), then the hole walks the
//                         bottom row;
//   - otherwise         : horizontal move of R, transmuting
//                         (R, BR) -> (R-1, bar(R-1)) when BR == bar(R)
//                         (relations (2) and (4)).
// While the hole walks the bottom row, pulling bar(A) under a top cell
// A stacks the pair as (A+1 / bar(A+1)); at A = n-1 the orientation of
// the resulting (n, n-bar) column is fixed by the letter above the
// pulled cell (relation (4)).
void slide_from(Grid& g, int start_col) {
  int n = g.n;
  int col = start_col;
  int row = 1;
  while (true) {
    if (row == 1) {
      Letter R = g.top_at(col + 1);
      Letter B = g.bot_at(col);
      if (!R && !B) return;
      Letter BR = g.bot_at(col + 1);
      // Relation (1) requires x != z-bar, so when BR == bar(R) and
      // R <= B <= bar(R) the move is the transmuting horizontal one.
      bool barpair = R && BR && BR == bar(R);
      bool transmute = false;
      if (barpair && B) {
        if (compare(B, R, n) == Ord::incomparable)
          transmute = true;
        else if (leq(R, B, n) && leq(B, bar(R), n))
          transmute = true;
      }
      bool vertical;
      if (!R)
        vertical = true;
      else if (!B)
        vertical = false;
      else if (transmute)
        vertical = false;
      else {
        Ord o = compare(B, R, n);
        vertical = (o == Ord::lt || o == Ord::eq);
      }
      if (vertical) {
        g.top[col] = B;
        g.bot[col] = 0;
        row = 2;
        continue;
      }
      if (BR && BR == bar(R)) {
        if (R >= 2 && R <= n - 1) {
          if (B && !leq(B, bar(R), n))
            throw NoRuleError("slide: no relation for sliding " + letter_str(R) +
                              " over its bar with " + letter_str(B) + " below");
          g.top[col] = R - 1;
          g.bot[col + 1] = -(R - 1);
        } else if (R == n || R == -n) {
          g.top[col] = n - 1;
          g.bot[col + 1] = -(n - 1);
        } else {
          throw NoRuleError("slide: cannot slide " + letter_str(R) + " over " +
                            letter_str(BR));
        }
      } else {
        g.top[col] = R;
      }
      g.top[col + 1] = 0;
      ++col;
    } else {
      Letter B2 = g.bot_at(col + 1);
      if (!B2) return;
      Letter A = g.top_at(col);
      if (A && B2 == bar(A)) {
        if (A >= 1 && A <= n - 2) {
          Letter y = g.top_at(col + 1);
          if (!y || !leq(A + 1, y, n) || !leq(y, -(A + 1), n))
            throw NoRuleError("slide: no relation for pairing " + letter_str(A) +
                              " with its bar");
          g.top[col] = A + 1;
          g.bot[col] = -(A + 1);
        } else if (A == n - 1) {
          Letter y = g.top_at(col + 1);
          if (y == -n) {
            g.top[col] = -n;
            g.bot[col] = n;
          } else if (y == n) {
            g.top[col] = n;
            g.bot[col] = -n;
          } else {
            throw NoRuleError("slide: ambiguous (n-1, n-1 bar) pairing");
          }
        } else {
          throw NoRuleError("slide: no relation for pairing " + letter_str(A) +
                            " with " + letter_str(B2));
        }
        g.bot[col + 1] = 0;
        ++col;
      } else {
        if (A && leq(B2, A, n))
          throw NoRuleError("slide: sliding " + letter_str(B2) + " under " +
                            letter_str(A) + " makes an illegal column");
        g.bot[col] = B2;
        g.bot[col + 1] = 0;
        ++col;
      }
    }
  }
}

}  // namespace

bool is_column_word(const std::vector<Letter>& w, int n) {
  for (std::size_t j = 0; j + 1 < w.size(); ++j)
    if (leq(w[j], w[j + 1], n)) return false;
  for (Letter x : w)
    if (!is_valid_letter(x, n)) return false;
  return true;
}

int column_count_N(const std::vector<Letter>& w, Letter z, int n) {
  int count = 0;
  for (Letter x : w)
    if (leq(x, z, n) || leq(bar(z), x, n)) ++count;
  return count;
}

bool is_admissible(const std::vector<Letter>& w, int n) {
  if (static_cast<int>(w.size()) > n) return false;
  for (Letter z = 1; z <= n; ++z) {
    bool has_z = std::find(w.begin(), w.end(), z) != w.end();
    bool has_zbar = std::find(w.begin(), w.end(), -z) != w.end();
    if (has_z && has_zbar && column_count_N(w, z, n) > z) return false;
  }
  return true;
}

std::vector<Letter> column_reduce(const std::vector<Letter>& w, int n) {
  ++g_column_reduce_count;
  for (Letter z = 1; z <= n; ++z) {
    bool has_z = std::find(w.begin(), w.end(), z) != w.end();
    bool has_zbar = std::find(w.begin(), w.end(), -z) != w.end();
    if (!(has_z && has_zbar) || column_count_N(w, z, n) <= z) continue;
    std::vector<Letter> out = w;
    if (z < n) {
      out.erase(std::find(out.begin(), out.end(), z));
      out.erase(std::find(out.begin(), out.end(), -z));
      return out;
    }
    for (std::size_t j = 0; j + 1 < out.size(); ++j) {
      if ((out[j] == n && out[j + 1] == -n) || (out[j] == -n && out[j + 1] == n)) {
        out.erase(out.begin() + static_cast<long>(j), out.begin() + static_cast<long>(j) + 2);
        return out;
      }
    }
    throw Error("column_reduce: no consecutive (n, n-bar) pair");
  }
  throw Error("column_reduce: word is admissible");
}

long column_reduce_invocations() { return g_column_reduce_count.load(); }
void reset_column_reduce_invocations() { g_column_reduce_count = 0; }

SkewTableau rectify_two_row(SkewTableau s) {
  check_skew(s);
  if (s.top.empty()) {
    // A bare row slides straight up.
    s.top = std::move(s.bottom);
    s.bottom.clear();
    s.top_offset = 0;
    return s;
  }
  while (s.top_offset > 0) {
    Grid g(s);
    slide_from(g, s.top_offset);
    s = g.to_skew();
    check_skew(s);
  }
  return s;
}

SkewTableau slide_out_once(const SkewTableau& s) {
  check_skew(s);
  Grid g(s);
  int n = s.n;
  int lo = s.top_offset + 1, hi = s.top_offset + s.top_size();
  for (int c = hi; c >= lo; --c) {
    Letter L = g.top[c];
    Letter below_src = g.bot_at(c);
    Letter b_dest = g.bot_at(c + 1);
    if (b_dest && b_dest == bar(L) && L > 0) {
      Letter newL;
      if (L <= n - 2) {
        newL = L + 1;
        // The forward move needs newL <= y <= bar(newL) for the letter
        // y below the vacated cell.
        if (!below_src || !leq(newL, below_src, n) || !leq(below_src, bar(newL), n))
          throw NoRuleError("slide_out: no relation advancing " + letter_str(L));
      } else if (L == n - 1) {
        if (below_src == -n)
          newL = n;
        else if (below_src == n)
          newL = -n;
        else
          throw NoRuleError("slide_out: ambiguous (n-1) advance");
      } else {
        throw NoRuleError("slide_out: cannot advance " + letter_str(L));
      }
      g.top[c + 1] = newL;
      g.bot[c + 1] = bar(newL);
    } else {
      g.top[c + 1] = L;
    }
    g.top[c] = 0;
  }
  SkewTableau out = g.to_skew();
  check_skew(out);
  return out;
}

std::optional<SkewTableau> slide_in_once(const SkewTableau& s) {
  check_skew(s);
  if (s.top.empty()) return s;  // nothing to move; offsets live with the caller
  if (s.top_offset < 1) return std::nullopt;
  Grid g(s);
  int n = s.n;
  int lo = s.top_offset + 1, hi = s.top_offset + s.top_size();
  for (int c = lo; c <= hi; ++c) {
    Letter L = g.top[c];
    Letter B = g.bot_at(c - 1);  // below the destination
    Letter BR = g.bot_at(c);     // below the source
    bool barpair = BR && BR == bar(L);
    bool transmute = false;
    if (barpair && B) {
      if (compare(B, L, n) == Ord::incomparable)
        transmute = true;
      else if (leq(L, B, n) && leq(B, bar(L), n))
        transmute = true;
    }
    if (!transmute && B) {
      Ord o = compare(B, L, n);
      if (o == Ord::lt || o == Ord::eq) return std::nullopt;  // vertical forced
    }
    if (transmute) {
      Letter newL;
      if (L >= 2 && L <= n - 1)
        newL = L - 1;
      else if (L == n || L == -n)
        newL = n - 1;
      else
        return std::nullopt;
      g.top[c - 1] = newL;
      g.bot[c] = bar(newL);
    } else if (barpair) {
      return std::nullopt;  // no relation slides L plainly over its bar
    } else {
      g.top[c - 1] = L;
    }
    g.top[c] = 0;
  }
  SkewTableau out = g.to_skew();
  if (!skew_valid(out)) return std::nullopt;
  return out;
}

}  // namespace krc
