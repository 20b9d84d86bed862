#include "krc/tableau.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace krc {

Tableau make_tableau(int n, std::vector<Letter> top, std::vector<Letter> bottom) {
  if (top.size() != bottom.size())
    throw Error("make_tableau: rows of unequal length");
  for (Letter x : top)
    if (!is_valid_letter(x, n)) throw Error("make_tableau: bad letter in top row");
  for (Letter x : bottom)
    if (!is_valid_letter(x, n)) throw Error("make_tableau: bad letter in bottom row");
  return Tableau{n, std::move(top), std::move(bottom)};
}

std::vector<Letter> column_word(const Tableau& t) {
  std::vector<Letter> w;
  w.reserve(2 * t.width());
  for (int i = 0; i < t.width(); ++i) {
    w.push_back(t.bottom[i]);
    w.push_back(t.top[i]);
  }
  return w;
}

ClassicalWeight weight(const Tableau& t) {
  ClassicalWeight w(t.n, 0);
  for (Letter x : t.top) w[std::abs(x) - 1] += x > 0 ? 1 : -1;
  for (Letter x : t.bottom) w[std::abs(x) - 1] += x > 0 ? 1 : -1;
  return w;
}

bool rows_weakly_increase(const Tableau& t) {
  for (int i = 0; i + 1 < t.width(); ++i) {
    if (!leq(t.top[i], t.top[i + 1], t.n)) return false;
    if (!leq(t.bottom[i], t.bottom[i + 1], t.n)) return false;
  }
  return true;
}

bool columns_admissible(const Tableau& t) {
  for (int i = 0; i < t.width(); ++i)
    if (leq(t.bottom[i], t.top[i], t.n)) return false;
  return true;
}

bool no_aa_configuration(const Tableau& t) {
  for (int i = 0; i + 1 < t.width(); ++i) {
    // (a/.)(a/a-bar)
    if (t.top[i] == t.top[i + 1] && t.bottom[i + 1] == bar(t.top[i + 1])) return false;
    // (a/a-bar)(./a-bar)
    if (t.bottom[i] == t.bottom[i + 1] && t.bottom[i] == bar(t.top[i])) return false;
  }
  return true;
}

bool no_n_bridge(const Tableau& t) {
  int n = t.n;
  // (n-1/n) ... (n/n-1-bar) and (n-1/n-bar) ... (n-bar/n-1-bar)
  bool seen_a = false, seen_b = false;
  for (int i = 0; i < t.width(); ++i) {
    if (seen_a && t.top[i] == n && t.bottom[i] == -(n - 1)) return false;
    if (seen_b && t.top[i] == -n && t.bottom[i] == -(n - 1)) return false;
    if (t.top[i] == n - 1 && t.bottom[i] == n) seen_a = true;
    if (t.top[i] == n - 1 && t.bottom[i] == -n) seen_b = true;
  }
  return true;
}

bool no_n_bridge_adjacent(const Tableau& t) {
  int n = t.n;
  for (int i = 0; i + 1 < t.width(); ++i) {
    if (t.top[i] == n - 1 && t.bottom[i] == n && t.top[i + 1] == n &&
        t.bottom[i + 1] == -(n - 1))
      return false;
    if (t.top[i] == n - 1 && t.bottom[i] == -n && t.top[i + 1] == -n &&
        t.bottom[i + 1] == -(n - 1))
      return false;
  }
  return true;
}

bool no_one_onebar_column(const Tableau& t) {
  for (int i = 0; i < t.width(); ++i)
    if (t.top[i] == 1 && t.bottom[i] == -1) return false;
  return true;
}

bool classical_legal(const Tableau& t) {
  return rows_weakly_increase(t) && columns_admissible(t) &&
         no_aa_configuration(t) && no_n_bridge(t) && no_one_onebar_column(t);
}

bool in_T_s(const Tableau& t, int s) {
  return t.width() == s && rows_weakly_increase(t) && columns_admissible(t) &&
         no_n_bridge(t);
}

void check_skew(const SkewTableau& s) {
  if (s.bottom_size() > s.top_offset + s.top_size())
    throw Error("skew: bottom row extends past the top row");
  for (int i = 0; i + 1 < s.top_size(); ++i)
    if (!leq(s.top[i], s.top[i + 1], s.n)) throw Error("skew: top row not increasing");
  for (int i = 0; i + 1 < s.bottom_size(); ++i)
    if (!leq(s.bottom[i], s.bottom[i + 1], s.n))
      throw Error("skew: bottom row not increasing");
  int lo = s.top_offset + 1, hi = std::min(s.top_offset + s.top_size(), s.bottom_size());
  for (int col = lo; col <= hi; ++col)
    if (leq(s.bottom_at(col), s.top_at(col), s.n))
      throw Error("skew: illegal overlap column");
}

bool skew_valid(const SkewTableau& s) {
  try {
    check_skew(s);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<Letter> skew_word(const SkewTableau& s) {
  std::vector<Letter> w;
  int width = std::max(s.top_offset + s.top_size(), s.bottom_size());
  for (int col = 1; col <= width; ++col) {
    if (Letter b = s.bottom_at(col)) w.push_back(b);
    if (Letter a = s.top_at(col)) w.push_back(a);
  }
  return w;
}

SkewTableau as_skew(const Tableau& t) { return SkewTableau{t.n, 0, t.top, t.bottom}; }

Tableau skew_to_tableau(const SkewTableau& s) {
  if (s.top_offset != 0 || s.top_size() != s.bottom_size())
    throw Error("skew_to_tableau: not a straight (k,k) shape");
  return Tableau{s.n, s.top, s.bottom};
}

std::string partition_str(const Partition& p) {
  std::ostringstream os;
  os << "(" << p.p1;
  if (p.p2) os << "," << p.p2;
  os << ")";
  return os.str();
}

std::string tableau_json(const Tableau& t) {
  nlohmann::json j;
  j["n"] = t.n;
  j["top"] = t.top;
  j["bottom"] = t.bottom;
  return j.dump();
}

Tableau tableau_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  return make_tableau(j.at("n").get<int>(), j.at("top").get<std::vector<int>>(),
                      j.at("bottom").get<std::vector<int>>());
}

std::string tableau_pretty(const Tableau& t) {
  std::ostringstream top, bot;
  for (int i = 0; i < t.width(); ++i) {
    top << (i ? " " : "") << letter_pretty(t.top[i]);
    bot << (i ? " " : "") << letter_pretty(t.bottom[i]);
  }
  if (t.empty()) return "(empty)";
  return top.str() + "\n" + bot.str();
}

std::string skew_pretty(const SkewTableau& s) {
  std::ostringstream top, bot;
  int width = std::max(s.top_offset + s.top_size(), s.bottom_size());
  for (int col = 1; col <= width; ++col) {
    Letter a = s.top_at(col), b = s.bottom_at(col);
    top << (col > 1 ? " " : "") << (a ? letter_pretty(a) : std::string("."));
    bot << (col > 1 ? " " : "") << (b ? letter_pretty(b) : std::string("."));
  }
  return top.str() + "\n" + bot.str();
}

}  // namespace krc
