#include "krc/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace krc {

namespace {

std::string tab_str(const Tableau& t) {
  std::string s = "[";
  for (int i = 0; i < t.width(); ++i) s += (i ? " " : "") + letter_str(t.top[i]);
  s += " /";
  for (int i = 0; i < t.width(); ++i) s += " " + letter_str(t.bottom[i]);
  return s + "]";
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t k) : parent(k) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool Report::all_pass() const {
  return std::all_of(items.begin(), items.end(),
                     [](const CheckResult& r) { return r.passed(); });
}

std::string Report::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& item : items)
    j.push_back(nlohmann::json{{"criterion", item.criterion},
                               {"verdict", item.verdict},
                               {"witness", item.witness}});
  return j.dump(2);
}

Report check_axioms(const AffineCrystal& c) {
  Report rep;
  int n = c.n;
  std::string bad;
  auto note = [&](int v, int i, const std::string& what) {
    if (bad.size() < 400)
      bad += what + " at " + tab_str(c.filled[v]) + " color " + std::to_string(i) + "; ";
  };

  for (int i = 0; i <= n; ++i)
    for (int v = 0; v < c.size(); ++v) {
      int w = c.f[i][v];
      if (w >= 0 && c.e[i][w] != v) note(v, i, "f/e not mutually inverse");
      int u = c.e[i][v];
      if (u >= 0 && c.f[i][u] != v) note(v, i, "e/f not mutually inverse");
    }
  rep.items.push_back({"axiom-arrows-inverse", bad.empty() ? "pass" : "fail", bad});

  bad.clear();
  for (int i = 0; i <= n; ++i)
    for (int v = 0; v < c.size(); ++v) {
      int w = c.f[i][v];
      if (w < 0) continue;
      for (int j = 0; j <= n; ++j) {
        int lhs = c.phi[j][w] - c.eps[j][w];
        int rhs = c.phi[j][v] - c.eps[j][v] - cartan(j, i, n);
        if (lhs != rhs) {
          note(v, i, "wt(f(b)) != wt(b) - alpha");
          break;
        }
      }
    }
  rep.items.push_back({"axiom-weight-shift", bad.empty() ? "pass" : "fail", bad});

  bad.clear();
  for (int v = 0; v < c.size(); ++v) {
    ClassicalWeight content = weight(c.filled[v]);
    for (int i = 1; i <= n; ++i)
      if (c.phi[i][v] - c.eps[i][v] != pair_h_classical(i, content))
        note(v, i, "phi - eps != <h_i, wt>");
    if (level(c.wt(v)) != 0) note(v, 0, "wt(b) not level 0");
  }
  rep.items.push_back({"axiom-string-lengths", bad.empty() ? "pass" : "fail", bad});
  return rep;
}

std::vector<int> b_min(const AffineCrystal& c) {
  int best = level(c.eps_weight(0));
  for (int v = 1; v < c.size(); ++v) best = std::min(best, level(c.eps_weight(v)));
  std::vector<int> out;
  for (int v = 0; v < c.size(); ++v)
    if (level(c.eps_weight(v)) == best) out.push_back(v);
  return out;
}

Report check_perfect(const AffineCrystal& c) {
  Report rep;
  int n = c.n, s = c.s;

  // Part 1: B (x) B connected.
  {
    long long v = c.size();
    if (v * v > 200'000'000)
      throw BudgetError("check_perfect: tensor square too large");
    UnionFind uf(static_cast<std::size_t>(v * v));
    for (int v2 = 0; v2 < c.size(); ++v2)
      for (int v1 = 0; v1 < c.size(); ++v1) {
        int p = v2 * c.size() + v1;
        for (int i = 0; i <= n; ++i) {
          int q = tensor_f(i, c, c, v2, v1);
          if (q >= 0) uf.unite(p, q);
        }
      }
    std::set<int> roots;
    for (long long p = 0; p < v * v; ++p) roots.insert(uf.find(static_cast<int>(p)));
    rep.items.push_back({"connectedness", roots.size() == 1 ? "pass" : "fail",
                         std::to_string(roots.size()) + " components"});
  }

  // Part 2: the singleton extremal weight s*Lambda2 - 2s*Lambda0, and
  // every weight below it.
  {
    AffineWeight lambda(n + 1, 0);
    lambda[0] = -2 * s;
    lambda[2] = s;
    std::vector<int> hits;
    bool cone_ok = true;
    std::string cone_witness;
    for (int v = 0; v < c.size(); ++v) {
      if (c.wt(v) == lambda) hits.push_back(v);
      // wt(b) = lambda - sum_{i>=1} m_i alpha_i with m_i >= 0, solved in
      // epsilon coordinates.
      ClassicalWeight d = k_omega2(s, n);
      ClassicalWeight content = weight(c.filled[v]);
      for (int i = 0; i < n; ++i) d[i] -= content[i];
      std::vector<long long> m(n + 1, 0);
      bool ok = true;
      long long acc = 0;
      for (int i = 1; i <= n - 2; ++i) {
        acc += d[i - 1];
        m[i] = acc;
      }
      long long rest = acc + d[n - 2];  // sum of first n-1 coords
      if ((rest - d[n - 1]) % 2 != 0 || (rest + d[n - 1]) % 2 != 0) ok = false;
      if (ok) {
        m[n - 1] = (rest - d[n - 1]) / 2;
        m[n] = (rest + d[n - 1]) / 2;
        for (int i = 1; i <= n; ++i)
          if (m[i] < 0) ok = false;
      }
      if (!ok && cone_ok) {
        cone_ok = false;
        cone_witness = tab_str(c.filled[v]);
      }
    }
    bool singleton = hits.size() == 1 && c.filled[hits[0]] == c.filled[c.hw_vertex(s)];
    rep.items.push_back({"weight-condition", singleton && cone_ok ? "pass" : "fail",
                         "|B_lambda| = " + std::to_string(hits.size()) +
                             (cone_ok ? "" : ", outside cone: " + cone_witness)});
  }

  rep.items.push_back(
      {"module-existence", "assumed",
       "part 3 of the perfectness definition is the standing hypothesis"});

  // Part 4: min level of eps equals s.
  int min_level = level(c.eps_weight(0));
  int argmin = 0;
  for (int v = 1; v < c.size(); ++v) {
    int l = level(c.eps_weight(v));
    if (l < min_level) {
      min_level = l;
      argmin = v;
    }
  }
  rep.items.push_back({"level-bound", min_level == s ? "pass" : "fail",
                       "min level " + std::to_string(min_level) + " at " +
                           tab_str(c.filled[argmin])});

  // Part 5: eps and phi restrict to bijections B_min -> (P_cl^+)_s.
  {
    auto mins = b_min(c);
    auto targets = level_weights(n, s);
    std::set<AffineWeight> target_set(targets.begin(), targets.end());
    std::set<AffineWeight> eps_imgs, phi_imgs;
    for (int v : mins) {
      eps_imgs.insert(c.eps_weight(v));
      phi_imgs.insert(c.phi_weight(v));
    }
    bool ok = eps_imgs.size() == mins.size() && phi_imgs.size() == mins.size() &&
              eps_imgs == target_set && phi_imgs == target_set;
    rep.items.push_back({"eps-phi-bijections", ok ? "pass" : "fail",
                         "|B_min| = " + std::to_string(mins.size()) +
                             ", |(P_cl^+)_s| = " + std::to_string(targets.size())});
  }
  return rep;
}

Tableau construct_minimal(const AffineWeight& lambda, int n, int s) {
  if (static_cast<int>(lambda.size()) != n + 1)
    throw Error("construct_minimal: weight has wrong length");
  for (int k : lambda)
    if (k < 0) throw Error("construct_minimal: weight not dominant");
  if (level(lambda) != s) throw Error("construct_minimal: weight has wrong level");

  Tableau t;
  t.n = n;
  auto push = [&](Letter a, Letter b, int count) {
    for (int i = 0; i < count; ++i) {
      t.top.push_back(a);
      t.bottom.push_back(b);
    }
  };

  // Left staircase.
  for (int i = 2; i <= n - 2; ++i) push(i - 1, i, lambda[i]);

  // Middle block from k_{n-1} and k_n; swap n and n-bar when
  // k_n < k_{n-1}.
  {
    int kn1 = lambda[n - 1], kn = lambda[n];
    Letter nn = n;
    if (kn < kn1) {
      std::swap(kn, kn1);
      nn = -n;
    }
    int diff = kn - kn1;
    push(n - 2, n - 1, kn1);
    push(n - 1, nn, diff / 2);
    if (diff % 2) push(bar(nn), nn, 1);
    push(bar(nn), -(n - 1), diff / 2);
    push(-(n - 1), -(n - 2), kn1);
  }

  // Right staircase.
  for (int i = n - 2; i >= 2; --i) push(-i, -(i - 1), lambda[i]);

  int s_prime = t.width();
  if (!t.empty() && !classical_legal(t))
    throw Error("construct_minimal: middle tableau is not legal");
  Tableau filled = fill(t, s);
  auto image = iota(filled, s_prime, s_prime + lambda[1], s);
  if (!image) throw Error("construct_minimal: iota vanished");
  return *image;
}

std::vector<Tableau> construct_minimal_family(const AffineCrystal& c) {
  std::vector<Tableau> out;
  for (const auto& lambda : level_weights(c.n, c.s))
    out.push_back(construct_minimal(lambda, c.n, c.s));
  return out;
}

bool check_minimal_set(const AffineCrystal& c, const std::vector<Tableau>& constructed) {
  std::set<Tableau> built(constructed.begin(), constructed.end());
  std::set<Tableau> minimal;
  for (int v : b_min(c)) minimal.insert(c.filled[v]);
  return built == minimal;
}

BlockDecomposition block_decomposition(const Tableau& t) {
  int n = t.n;
  BlockDecomposition d;
  int prev = 0;
  for (int i = 0; i < t.width(); ++i) {
    Letter a = t.top[i], b = t.bottom[i];
    int cls;
    if (b == bar(a))
      cls = 3;
    else if (a > 0 && (b > 0 || b == -n))
      cls = 1;
    else if (a > 0 && b < 0 && -b <= n - 1 && a < -b)
      cls = 2;
    else if (a > 0 && b < 0 && -b <= n - 1 && -b < a && a <= n - 1)
      cls = 4;
    else if (b < 0 && (a < 0 || a == n))
      cls = 5;
    else
      throw Error("block_decomposition: unclassifiable column in " + tab_str(t));
    if (cls < prev)
      throw Error("block_decomposition: blocks out of order in " + tab_str(t));
    prev = cls;
    switch (cls) {
      case 1: ++d.k1; break;
      case 2: ++d.k2; break;
      case 3: ++d.k3; break;
      case 4: ++d.k4; break;
      case 5: ++d.k5; break;
    }
  }
  return d;
}

Report check_structure_lemmas(const AffineCrystal& c) {
  Report rep;
  int n = c.n, s = c.s;
  auto mins = b_min(c);
  std::set<int> min_set(mins.begin(), mins.end());

  // Level lower bound for eps and phi on every vertex.
  {
    std::string bad;
    for (int v = 0; v < c.size(); ++v)
      if (level(c.eps_weight(v)) < s || level(c.phi_weight(v)) < s) {
        bad = tab_str(c.filled[v]);
        break;
      }
    rep.items.push_back({"level-lower-bound", bad.empty() ? "pass" : "fail", bad});
  }

  // Block widths of minimal tableaux in the top component.
  {
    std::string bad;
    for (int v : mins) {
      if (c.component[v] != s) continue;
      BlockDecomposition d = block_decomposition(c.filled[v]);
      if (d.k1 + d.k2 != s / 2 || d.k4 + d.k5 != s / 2 || d.k3 != s % 2) {
        bad = tab_str(c.filled[v]);
        break;
      }
    }
    rep.items.push_back({"minimal-block-widths", bad.empty() ? "pass" : "fail", bad});
  }

  // Mixed columns other than the n-boundary ones force membership in
  // the image of iota_{s-1}^s.
  {
    std::string bad;
    std::string logged;
    for (int v : mins) {
      if (c.component[v] != s) continue;
      const Tableau& t = c.filled[v];
      bool has_forbidden_mixed = false;
      for (int i = 0; i < t.width(); ++i) {
        Letter a = t.top[i], b = t.bottom[i];
        bool mixed = (a > 0) != (b > 0);
        if (!mixed) continue;
        bool allowed = (a == n && b == -n) || (a == -n && b == n) ||
                       (a == n - 1 && b == -n) || (a == n && b == -(n - 1));
        if ((a == n - 1 && b == -n) || (a == n && b == -(n - 1)))
          if (logged.size() < 200) logged += tab_str(t) + "; ";
        if (!allowed) has_forbidden_mixed = true;
      }
      if (has_forbidden_mixed && !iota(t, s, s - 1, s)) {
        bad = tab_str(t);
        break;
      }
    }
    rep.items.push_back({"minimal-mixed-columns", bad.empty() ? "pass" : "fail",
                         bad.empty() ? "n-boundary columns seen: " + logged : bad});
  }

  // Unmixed minimal tableaux in the top component agree with the
  // constructed family, and their paired column counts balance.
  {
    std::string bad;
    std::set<Tableau> family;
    for (const auto& lambda : level_weights(n, s))
      family.insert(construct_minimal(lambda, n, s));
    for (int v : mins) {
      if (c.component[v] != s) continue;
      const Tableau& t = c.filled[v];
      bool only_allowed_mixed = true;
      for (int i = 0; i < t.width(); ++i) {
        Letter a = t.top[i], b = t.bottom[i];
        if ((a > 0) != (b > 0)) {
          bool allowed = (a == n && b == -n) || (a == -n && b == n) ||
                         (a == n - 1 && b == -n) || (a == n && b == -(n - 1));
          if (!allowed) only_allowed_mixed = false;
        }
      }
      if (!only_allowed_mixed) continue;
      if (!family.count(t)) {
        bad = "not constructed: " + tab_str(t);
        break;
      }
      auto count_cols = [&](Letter a, Letter b) {
        int cnt = 0;
        for (int i = 0; i < t.width(); ++i)
          if (t.top[i] == a && t.bottom[i] == b) ++cnt;
        return cnt;
      };
      for (int i = 3; i <= n; ++i)
        if (count_cols(i - 1, i) != count_cols(-i, -(i - 1))) {
          bad = "unbalanced (" + std::to_string(i - 1) + "/" + std::to_string(i) +
                ") in " + tab_str(t);
          break;
        }
      if (count_cols(n - 1, -n) != count_cols(n, -(n - 1)))
        bad = "unbalanced n-boundary pair in " + tab_str(t);
      if (!bad.empty()) break;
    }
    rep.items.push_back({"minimal-balance", bad.empty() ? "pass" : "fail", bad});
  }

  // iota statistic shifts along every embedding chain.
  {
    std::string bad;
    for (int v = 0; v < c.size() && bad.empty(); ++v) {
      int k = c.component[v];
      Tableau cur = c.filled[v];
      int prev_id = v;
      for (int m = k; m < s && bad.empty(); ++m) {
        auto up = iota(cur, m, m + 1, s);
        if (!up) {
          bad = "iota up vanished at " + tab_str(cur);
          break;
        }
        int up_id = c.vertex_of(*up);
        if (c.eps[1][up_id] != c.eps[1][prev_id] + 1 ||
            c.phi[1][up_id] != c.phi[1][prev_id] + 1 ||
            c.eps[0][up_id] != c.eps[0][prev_id] - 1 ||
            c.phi[0][up_id] != c.phi[0][prev_id] - 1)
          bad = "statistic shift failed at " + tab_str(c.filled[prev_id]);
        for (int i = 2; i <= n; ++i)
          if (c.eps[i][up_id] != c.eps[i][prev_id] ||
              c.phi[i][up_id] != c.phi[i][prev_id])
            bad = "classical statistic changed at " + tab_str(c.filled[prev_id]);
        cur = *up;
        prev_id = up_id;
      }
    }
    rep.items.push_back({"iota-shifts", bad.empty() ? "pass" : "fail", bad});
  }

  // f0 decreases the branching rank by one; sigma flips it.
  {
    std::string bad;
    for (int v = 0; v < c.size() && bad.empty(); ++v) {
      int w = c.f[0][v];
      if (w >= 0 &&
          c.bc.vertices[c.bc_of[w]].rank != c.bc.vertices[c.bc_of[v]].rank - 1)
        bad = "f0 rank drop failed at " + tab_str(c.filled[v]);
      if (c.bc.vertices[c.bc_of[c.sigma_of[v]]].rank !=
          2 * s - c.bc.vertices[c.bc_of[v]].rank)
        bad = "sigma rank flip failed at " + tab_str(c.filled[v]);
    }
    rep.items.push_back({"rank-behaviour", bad.empty() ? "pass" : "fail", bad});
  }

  // Weight swap under sigma.
  {
    std::string bad;
    for (int v = 0; v < c.size() && bad.empty(); ++v) {
      AffineWeight w = c.wt(v), sw = c.wt(c.sigma_of[v]);
      std::swap(w[0], w[1]);
      if (w != sw) bad = "weight swap failed at " + tab_str(c.filled[v]);
    }
    rep.items.push_back({"sigma-weight-swap", bad.empty() ? "pass" : "fail", bad});
  }
  return rep;
}

Report verify_all(const AffineCrystal& c) {
  Report rep = check_axioms(c);
  Report perfect = check_perfect(c);
  rep.items.insert(rep.items.end(), perfect.items.begin(), perfect.items.end());
  Report structure = check_structure_lemmas(c);
  rep.items.insert(rep.items.end(), structure.items.begin(), structure.items.end());
  CheckResult minimal{"minimal-set",
                      check_minimal_set(c, construct_minimal_family(c)) ? "pass" : "fail",
                      ""};
  rep.items.push_back(minimal);
  return rep;
}

}  // namespace krc
