#include <algorithm>
#include <set>

#include "doctest.h"
#include "krc/classical_crystal.hpp"
#include "support/brute.hpp"
#include "support/weyl_dim.hpp"

using namespace krc;

TEST_CASE("worked Kashiwara operator example") {
  Tableau t = make_tableau(4, {1, 2, 4, -3, -3}, {3, -4, -4, -2, -1});
  CHECK(tab_f(2, t) == make_tableau(4, {1, 2, 4, -3, -2}, {3, -4, -4, -2, -1}));
  CHECK(tab_f(4, t) == make_tableau(4, {1, 2, 4, -3, -3}, {-4, -4, -4, -2, -1}));
  CHECK(tab_e(4, t) == make_tableau(4, {1, 2, 4, -3, -3}, {3, 3, -4, -2, -1}));
  CHECK_FALSE(is_classical_hw(t));  // e4 is defined
}

TEST_CASE("highest weight vectors") {
  Tableau u2 = highest_weight_tableau(4, 2);
  CHECK(is_classical_hw(u2));
  for (int i = 1; i <= 4; ++i) CHECK_FALSE(tab_e(i, u2).has_value());
  auto f2 = tab_f(2, u2);
  REQUIRE(f2.has_value());
  CHECK_FALSE(is_classical_hw(*f2));
}

TEST_CASE("component sizes match the Weyl dimension formula") {
  for (int n : {4, 5})
    for (int k = 0; k <= 3; ++k) {
      auto c = generate_component(n, k);
      CHECK(c.size() == oracle::weyl_dim_k_omega2(n, k));
    }
  CHECK(generate_component(4, 0).size() == 1);
}

TEST_CASE("components agree with brute-force enumeration") {
  for (int k = 0; k <= 2; ++k) {
    auto c = generate_component(4, k);
    auto brute = oracle::enumerate_classical_legal(4, k);
    std::set<Tableau> from_bfs(c.vertices.begin(), c.vertices.end());
    std::set<Tableau> from_brute(brute.begin(), brute.end());
    CHECK(from_bfs == from_brute);
    for (const auto& t : c.vertices) CHECK(classical_legal(t));
  }
}

TEST_CASE("exactly one highest weight vertex per component") {
  for (int n : {4, 5})
    for (int k = 1; k <= 2; ++k) {
      auto c = generate_component(n, k);
      int hw = 0;
      for (const auto& t : c.vertices) hw += is_classical_hw(t);
      CHECK(hw == 1);
    }
}

namespace {

// Simple reflections on epsilon coordinates: s_i swaps coordinates
// i, i+1; s_n swaps and negates the last two.
ClassicalWeight reflect(ClassicalWeight w, int i) {
  int n = static_cast<int>(w.size());
  if (i < n)
    std::swap(w[i - 1], w[i]);
  else {
    std::swap(w[n - 2], w[n - 1]);
    w[n - 2] = -w[n - 2];
    w[n - 1] = -w[n - 1];
  }
  return w;
}

}  // namespace

TEST_CASE("weight multiset is Weyl group symmetric") {
  for (int n : {4, 5})
    for (int k = 1; k <= 2; ++k) {
      auto c = generate_component(n, k);
      std::multiset<ClassicalWeight> weights;
      for (const auto& t : c.vertices) weights.insert(weight(t));
      for (int i = 1; i <= n; ++i) {
        std::multiset<ClassicalWeight> reflected;
        for (const auto& w : weights) reflected.insert(reflect(w, i));
        CHECK(reflected == weights);
      }
    }
}

TEST_CASE("worked dual example") {
  SkewTableau t{4, 0, {1, 1, 2}, {-3}};
  SkewTableau expected{4, 0, {3, -1, -1}, {-2}};
  CHECK(dual_star_two_row(t) == expected);
}

TEST_CASE("dual sends highest to lowest weight") {
  for (int n : {4, 5})
    for (int k = 1; k <= 2; ++k) {
      auto c = generate_component(n, k);
      Tableau low = dual_star(highest_weight_tableau(n, k));
      int lows = 0;
      for (const auto& t : c.vertices) {
        bool lowest = true;
        for (int i = 1; i <= n && lowest; ++i) lowest = !tab_f(i, t).has_value();
        if (lowest) {
          ++lows;
          CHECK(t == low);
        }
      }
      CHECK(lows == 1);
    }
  CHECK(dual_star(highest_weight_tableau(4, 3)) ==
        make_tableau(4, {-2, -2, -2}, {-1, -1, -1}));
}

TEST_CASE("dual is an involution with the tau twist") {
  for (int n : {4, 5})
    for (int k = 1; k <= 2; ++k) {
      auto c = generate_component(n, k);
      for (const auto& t : c.vertices) {
        Tableau d = dual_star(t);
        CHECK(dual_star(d) == t);
        for (int i = 1; i <= n; ++i) {
          auto ft = tab_f(i, t);
          auto ed = tab_e(tau(i, n), d);
          if (ft)
            CHECK(dual_star(*ft) == ed);
          else
            CHECK_FALSE(ed.has_value());
        }
      }
    }
}

TEST_CASE("dual matches the path-replay oracle") {
  // (f_i b)* = e_{tau(i)} b* lets the dual be computed by replaying the
  // path from the highest weight vector with e-operators from the
  // lowest weight vertex, found independently as the unique phi = 0
  // vertex.
  for (int n : {4, 5}) {
    auto c = generate_component(n, 2);
    int low = -1;
    for (int v = 0; v < c.size(); ++v) {
      bool lowest = true;
      for (int i = 1; i <= n && lowest; ++i) lowest = c.f[v][i] < 0;
      if (lowest) low = v;
    }
    REQUIRE(low >= 0);
    std::vector<int> parent(c.size(), -1), color(c.size(), 0);
    std::vector<int> order{0};
    std::vector<char> seen(c.size(), 0);
    seen[0] = 1;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
      int v = order[qi];
      for (int i = 1; i <= n; ++i) {
        int w = c.f[v][i];
        if (w >= 0 && !seen[w]) {
          seen[w] = 1;
          parent[w] = v;
          color[w] = i;
          order.push_back(w);
        }
      }
    }
    for (int v = 0; v < c.size(); ++v) {
      std::vector<int> path;
      for (int cur = v; parent[cur] >= 0; cur = parent[cur]) path.push_back(color[cur]);
      Tableau d = c.vertices[low];
      for (auto it = path.rbegin(); it != path.rend(); ++it) {
        auto next = tab_e(tau(*it, n), d);
        REQUIRE(next.has_value());
        d = *next;
      }
      CHECK(dual_star(c.vertices[v]) == d);
    }
  }
}

TEST_CASE("DOT export mentions every vertex") {
  auto c = generate_component(4, 1);
  auto dot = component_dot(c);
  CHECK(dot.find("label=1") != std::string::npos);
  CHECK(dot.find("v27") != std::string::npos);
}

TEST_CASE("budget guard") {
  CHECK_THROWS_AS(generate_component(4, 2, 10), BudgetError);
}
