#include "krc/reduced_form.hpp"

#include <algorithm>

namespace krc {

namespace {

int count_cols(const Tableau& t, Letter a, Letter b) {
  int c = 0;
  for (int i = 0; i < t.width(); ++i)
    if (t.top[i] == a && t.bottom[i] == b) ++c;
  return c;
}

}  // namespace

Tableau null_configuration(int n, int k) {
  Tableau t;
  t.n = n;
  int m = k / 2;
  for (int i = 0; i < m; ++i) {
    t.top.push_back(1);
    t.bottom.push_back(-2);
  }
  if (k % 2) {
    t.top.push_back(2);
    t.bottom.push_back(-2);
  }
  for (int i = 0; i < m; ++i) {
    t.top.push_back(2);
    t.bottom.push_back(-1);
  }
  return t;
}

Strip strip(const Tableau& t) {
  if (!classical_legal(t)) throw Error("strip: tableau is not classical-legal");
  int k = t.width();
  int n_12b = count_cols(t, 1, -2);
  int n_21b = count_cols(t, 2, -1);
  int e = count_cols(t, 2, -2);  // at most 1 in a legal tableau
  int m = std::min(n_12b, n_21b);

  int total_ones = 0, total_onebars = 0;
  for (int i = 0; i < k; ++i) {
    if (t.top[i] == 1) ++total_ones;
    if (t.bottom[i] == -1) ++total_onebars;
  }

  Strip out;
  out.r1 = total_ones - m;
  out.r2 = 2 * m + e;
  out.r3 = total_onebars - m;

  // Null-configuration columns: the last m (1/2-bar)'s, the (2/2-bar),
  // the first m (2/1-bar)'s.  They are contiguous in a legal tableau.
  std::vector<bool> in_null(k, false);
  int seen = 0;
  for (int i = k - 1; i >= 0 && seen < m; --i)
    if (t.top[i] == 1 && t.bottom[i] == -2) {
      in_null[i] = true;
      ++seen;
    }
  for (int i = 0; i < k; ++i)
    if (t.top[i] == 2 && t.bottom[i] == -2) in_null[i] = true;
  seen = 0;
  for (int i = 0; i < k && seen < m; ++i)
    if (t.top[i] == 2 && t.bottom[i] == -1) {
      in_null[i] = true;
      ++seen;
    }
  int first_null = -1, null_count = 0;
  for (int i = 0; i < k; ++i)
    if (in_null[i]) {
      if (first_null < 0) first_null = i;
      ++null_count;
    }
  if (null_count != out.r2) throw Error("strip: null-configuration miscount");
  for (int i = first_null; first_null >= 0 && i < first_null + out.r2; ++i)
    if (!in_null[i]) throw Error("strip: null-configuration not contiguous");

  // Surviving cells, placed as a skew of shape (k, k - t2) / (t1).
  SkewTableau skew;
  skew.n = t.n;
  skew.top_offset = out.t1();
  int tops_skipped = 0;
  for (int i = 0; i < k; ++i) {
    if (in_null[i]) continue;
    if (t.top[i] == 1 && tops_skipped < out.r1) {
      ++tops_skipped;
      continue;
    }
    skew.top.push_back(t.top[i]);
  }
  int keep_bottom = k - out.t2();
  int bottoms_kept = 0;
  for (int i = 0; i < k && bottoms_kept < keep_bottom; ++i) {
    if (in_null[i]) continue;
    skew.bottom.push_back(t.bottom[i]);
    ++bottoms_kept;
  }
  if (skew.top.empty()) skew.top_offset = skew.bottom_size();
  check_skew(skew);
  out.skew = std::move(skew);
  return out;
}

Tableau refill(const SkewTableau& skew, int width, int t1, int t2) {
  int n = skew.n;
  int r2 = std::max(0, t1 + t2 - width);
  int r1 = t1 - r2, r3 = t2 - r2;
  if (r1 < 0 || r3 < 0) throw Error("refill: inconsistent (t1, t2, width)");
  if (skew.top_size() != width - t1 || skew.bottom_size() != width - t2)
    throw Error("refill: skew does not match (t1, t2, width)");

  Tableau out;
  out.n = n;
  if (r2 > 0) {
    // Every surviving bottom cell lies under a reinserted 1; every
    // surviving top cell sits over a reinserted 1-bar.
    if (r1 != skew.bottom_size() || r3 != skew.top_size())
      throw Error("refill: null-configuration size inconsistent with skew");
    for (int i = 0; i < r1; ++i) {
      out.top.push_back(1);
      out.bottom.push_back(skew.bottom[i]);
    }
    Tableau nc = null_configuration(n, r2);
    out.top.insert(out.top.end(), nc.top.begin(), nc.top.end());
    out.bottom.insert(out.bottom.end(), nc.bottom.begin(), nc.bottom.end());
    for (int i = 0; i < r3; ++i) {
      out.top.push_back(skew.top[i]);
      out.bottom.push_back(-1);
    }
  } else {
    // Cells indexed relative to the prescribed shape: top cell i sits
    // at column t1+1+i, bottom cell i at column i+1.
    for (int c = 1; c <= width; ++c) {
      Letter a = c > t1 ? skew.top[c - t1 - 1] : 0;
      Letter b = c <= width - t2 ? skew.bottom[c - 1] : 0;
      if (c <= r1)
        a = 1;
      else if (c > width - r3)
        b = -1;
      if (!a || !b) throw Error("refill: uncovered cell");
      out.top.push_back(a);
      out.bottom.push_back(b);
    }
  }
  if (!classical_legal(out)) throw Error("refill: result is not classical-legal");
  Strip round = strip(out);
  if (round.t1() != t1 || round.t2() != t2 || round.skew != skew)
    throw Error("refill: strip round-trip mismatch");
  return out;
}

ReducedForm reduced_form(const Tableau& t) {
  ReducedForm rf;
  rf.parts = strip(t);
  rf.reduced = rectify_two_row(rf.parts.skew);
  rf.shape = Partition{rf.reduced.top_size(), rf.reduced.bottom_size()};
  rf.rank = t.width() - rf.parts.t1() + rf.parts.t2();
  return rf;
}

}  // namespace krc
