#include "krc/branching.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "krc/affine_crystal.hpp"

namespace krc {

void build_branching(AffineCrystal& c) {
  int V = c.size();
  int n = c.n, s = c.s;
  c.bc_of.assign(V, -1);
  c.path_parent.assign(V, -1);
  c.path_color.assign(V, 0);
  c.bc.vertices.clear();
  c.bc.edges.clear();

  for (int v0 = 0; v0 < V; ++v0) {
    if (c.bc_of[v0] >= 0) continue;
    // Undirected closure under colors 2..n.
    std::vector<int> members{v0};
    std::deque<int> queue{v0};
    int id = static_cast<int>(c.bc.vertices.size());
    c.bc_of[v0] = id;
    auto visit = [&](int w) {
      if (w >= 0 && c.bc_of[w] < 0) {
        c.bc_of[w] = id;
        members.push_back(w);
        queue.push_back(w);
      }
    };
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int i = 2; i <= n; ++i) {
        visit(c.f[i][v]);
        visit(c.e[i][v]);
      }
    }

    int hw = -1;
    for (int v : members) {
      bool is_hw = true;
      for (int i = 2; i <= n && is_hw; ++i) is_hw = c.eps[i][v] == 0;
      if (is_hw) {
        if (hw >= 0) throw Error("branching: two highest weight vertices in a class");
        hw = v;
      }
    }
    if (hw < 0) throw Error("branching: class without highest weight vertex");

    // f-closure tree from the highest weight vertex, recording the
    // operator path used to replay the local dual.
    std::deque<int> tree{hw};
    std::vector<char> seen(members.size(), 0);
    std::map<int, int> local;
    for (std::size_t i = 0; i < members.size(); ++i)
      local[members[i]] = static_cast<int>(i);
    seen[local[hw]] = 1;
    c.path_parent[hw] = -1;
    int reached = 1;
    while (!tree.empty()) {
      int v = tree.front();
      tree.pop_front();
      for (int i = 2; i <= n; ++i) {
        int w = c.f[i][v];
        if (w < 0 || seen[local[w]]) continue;
        seen[local[w]] = 1;
        c.path_parent[w] = v;
        c.path_color[w] = i;
        tree.push_back(w);
        ++reached;
      }
    }
    if (reached != static_cast<int>(members.size()))
      throw Error("branching: f-closure from highest weight missed members");

    BranchingVertex bv;
    bv.component = c.component[hw];
    ReducedForm rf = reduced_form(c.dropped[hw]);
    bv.shape = rf.shape;
    bv.rank = rf.rank + s - bv.component;
    bv.hw = hw;
    std::sort(members.begin(), members.end());
    bv.members = std::move(members);
    c.bc.vertices.push_back(std::move(bv));
  }

  // Complement lookup: same component, same shape, mirrored rank.
  std::map<std::tuple<int, int, int, int>, int> key;
  for (std::size_t i = 0; i < c.bc.vertices.size(); ++i) {
    const auto& bv = c.bc.vertices[i];
    auto [it, inserted] = key.emplace(
        std::make_tuple(bv.component, bv.shape.p1, bv.shape.p2, bv.rank), i);
    if (!inserted) throw Error("branching: (component, shape, rank) not unique");
  }
  for (std::size_t i = 0; i < c.bc.vertices.size(); ++i) {
    auto& bv = c.bc.vertices[i];
    auto it = key.find(std::make_tuple(bv.component, bv.shape.p1, bv.shape.p2,
                                       2 * s - bv.rank));
    if (it == key.end()) throw Error("branching: missing complementary vertex");
    bv.complement = it->second;
  }

  std::set<std::pair<int, int>> edge_set;
  for (int v = 0; v < V; ++v)
    if (c.f[1][v] >= 0) edge_set.emplace(c.bc_of[v], c.bc_of[c.f[1][v]]);
  c.bc.edges.assign(edge_set.begin(), edge_set.end());
}

int star_bc(const AffineCrystal& c, int v) {
  std::vector<int> colors;
  for (int cur = v; c.path_parent[cur] >= 0; cur = c.path_parent[cur])
    colors.push_back(c.path_color[cur]);
  std::reverse(colors.begin(), colors.end());
  const BranchingVertex& bv = c.bc.vertices[c.bc_of[v]];
  int cur = c.bc.vertices[bv.complement].hw;
  for (int color : colors) {
    cur = c.f[color][cur];
    if (cur < 0) throw Error("star_bc: path replay fell off the crystal");
  }
  return cur;
}

int sigma_vertex(const AffineCrystal& c, int v) {
  int k = c.component[v];
  int ell = c.ell_of[v];
  int star = star_bc(c, v);
  auto image = iota(c.filled[star], k, c.s + ell - k, c.s);
  if (!image) throw Error("sigma: iota vanished on the dual");
  return c.vertex_of(*image);
}

std::string bc_dot(const AffineCrystal& c) {
  std::ostringstream os;
  os << "digraph branching {\n  rankdir=TB;\n";
  int max_rank = 0;
  for (const auto& bv : c.bc.vertices) max_rank = std::max(max_rank, bv.rank);
  for (int r = 0; r <= max_rank; ++r) {
    os << "  { rank=same;";
    for (std::size_t i = 0; i < c.bc.vertices.size(); ++i)
      if (c.bc.vertices[i].rank == r) os << " b" << i << ";";
    os << " }\n";
  }
  for (std::size_t i = 0; i < c.bc.vertices.size(); ++i) {
    const auto& bv = c.bc.vertices[i];
    os << "  b" << i << " [label=\"" << partition_str(bv.shape) << " k="
       << bv.component << " r=" << bv.rank << " #" << bv.members.size() << "\"];\n";
  }
  for (auto [a, b] : c.bc.edges) os << "  b" << a << " -> b" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace krc
