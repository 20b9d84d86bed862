#include "krc/classical_crystal.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "krc/plactic.hpp"

namespace krc {

std::optional<Tableau> tab_f(int i, const Tableau& t) {
  auto w = column_word(t);
  Signature sig = signature(i, w, t.n);
  if (sig.phi == 0) return std::nullopt;
  Tableau out = t;
  int pos = sig.f_position;
  Letter moved = *letter_f(i, w[pos], t.n);
  if (word_is_top(pos))
    out.top[word_column(pos)] = moved;
  else
    out.bottom[word_column(pos)] = moved;
  return out;
}

std::optional<Tableau> tab_e(int i, const Tableau& t) {
  auto w = column_word(t);
  Signature sig = signature(i, w, t.n);
  if (sig.eps == 0) return std::nullopt;
  Tableau out = t;
  int pos = sig.e_position;
  Letter moved = *letter_e(i, w[pos], t.n);
  if (word_is_top(pos))
    out.top[word_column(pos)] = moved;
  else
    out.bottom[word_column(pos)] = moved;
  return out;
}

bool is_classical_hw(const Tableau& t) {
  auto w = column_word(t);
  for (int i = 1; i <= t.n; ++i)
    if (signature(i, w, t.n).eps != 0) return false;
  return true;
}

Tableau highest_weight_tableau(int n, int k) {
  Tableau t;
  t.n = n;
  t.top.assign(k, 1);
  t.bottom.assign(k, 2);
  return t;
}

int tau(int i, int n) {
  if (n % 2 == 0) return i;
  if (i == n - 1) return n;
  if (i == n) return n - 1;
  return i;
}

Letter star_letter(Letter x, int n) {
  if (n % 2 == 1 && (x == n || x == -n)) return x;
  return bar(x);
}

SkewTableau dual_star_two_row(const SkewTableau& s) {
  if (!s.straight()) throw Error("dual_star: input must be a straight tableau");
  int p = s.top_size(), q = s.bottom_size();
  SkewTableau rotated;
  rotated.n = s.n;
  rotated.top_offset = p - q;
  for (int i = q - 1; i >= 0; --i) rotated.top.push_back(star_letter(s.bottom[i], s.n));
  for (int i = p - 1; i >= 0; --i) rotated.bottom.push_back(star_letter(s.top[i], s.n));
  SkewTableau out = rectify_two_row(rotated);
  if (out.top_size() != p || out.bottom_size() != q)
    throw Error("dual_star: rectification changed the shape");
  return out;
}

Tableau dual_star(const Tableau& t) {
  return skew_to_tableau(dual_star_two_row(as_skew(t)));
}

ClassicalComponent generate_component(int n, int k, std::size_t budget) {
  ClassicalComponent c;
  c.n = n;
  c.k = k;
  Tableau u = highest_weight_tableau(n, k);
  c.vertices.push_back(u);
  c.index.emplace(u, 0);
  std::deque<int> queue{0};
  std::vector<std::vector<int>> f_edges;
  f_edges.push_back(std::vector<int>(n + 1, -1));
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      auto next = tab_f(i, c.vertices[v]);
      if (!next) continue;
      auto [it, inserted] = c.index.emplace(*next, c.size());
      if (inserted) {
        if (c.vertices.size() >= budget)
          throw BudgetError("generate_component: vertex budget exceeded");
        if (!classical_legal(*next))
          throw Error("generate_component: operator left the legal set");
        c.vertices.push_back(*next);
        f_edges.push_back(std::vector<int>(n + 1, -1));
        queue.push_back(it->second);
      }
      f_edges[v][i] = it->second;
    }
  }
  c.f = std::move(f_edges);
  c.e.assign(c.size(), std::vector<int>(n + 1, -1));
  for (int v = 0; v < c.size(); ++v)
    for (int i = 1; i <= n; ++i)
      if (c.f[v][i] >= 0) c.e[c.f[v][i]][i] = v;
  return c;
}

std::string component_dot(const ClassicalComponent& c) {
  std::ostringstream os;
  os << "digraph component {\n  rankdir=TB;\n";
  for (int v = 0; v < c.size(); ++v) {
    std::string label;
    const Tableau& t = c.vertices[v];
    for (int i = 0; i < t.width(); ++i)
      label += (i ? " " : "") + letter_str(t.top[i]);
    label += " / ";
    for (int i = 0; i < t.width(); ++i)
      label += (i ? " " : "") + letter_str(t.bottom[i]);
    os << "  v" << v << " [label=\"" << label << "\"];\n";
  }
  for (int v = 0; v < c.size(); ++v)
    for (int i = 1; i <= c.n; ++i)
      if (c.f[v][i] >= 0)
        os << "  v" << v << " -> v" << c.f[v][i] << " [label=" << i << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace krc
