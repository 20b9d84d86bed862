#include "krc/affine_crystal.hpp"

#include <sstream>

#include "json.hpp"

namespace krc {

int AffineCrystal::vertex_of(const Tableau& t) const {
  auto it = index.find(t);
  if (it == index.end()) throw Error("vertex_of: unknown tableau");
  return it->second;
}

int AffineCrystal::hw_vertex(int k) const {
  return vertex_of(fill(highest_weight_tableau(n, k), s));
}

AffineWeight AffineCrystal::eps_weight(int v) const {
  AffineWeight w(n + 1);
  for (int i = 0; i <= n; ++i) w[i] = eps[i][v];
  return w;
}

AffineWeight AffineCrystal::phi_weight(int v) const {
  AffineWeight w(n + 1);
  for (int i = 0; i <= n; ++i) w[i] = phi[i][v];
  return w;
}

AffineWeight AffineCrystal::wt(int v) const {
  AffineWeight w(n + 1);
  for (int i = 0; i <= n; ++i) w[i] = phi[i][v] - eps[i][v];
  return w;
}

namespace {

// String lengths along one color from the edge tables.
void fill_string_lengths(int color, AffineCrystal& c) {
  int V = c.size();
  auto& eps = c.eps[color];
  auto& phi = c.phi[color];
  eps.assign(V, -1);
  phi.assign(V, -1);
  for (int v = 0; v < V; ++v) {
    if (c.e[color][v] >= 0) continue;  // not a string head
    int d = 0;
    for (int cur = v; cur >= 0; cur = c.f[color][cur]) eps[cur] = d++;
  }
  for (int v = 0; v < V; ++v) {
    if (c.f[color][v] >= 0) continue;
    int d = 0;
    for (int cur = v; cur >= 0; cur = c.e[color][cur]) phi[cur] = d++;
  }
  for (int v = 0; v < V; ++v)
    if (eps[v] < 0 || phi[v] < 0) throw Error("string length scan missed a vertex");
}

}  // namespace

AffineCrystal assemble(int n, int s, std::size_t budget) {
  if (n < 4) throw Error("assemble: type D_n requires n >= 4");
  if (s < 1) throw Error("assemble: s must be positive");
  AffineCrystal c;
  c.n = n;
  c.s = s;

  // Classical components, dropped form first.
  std::vector<ClassicalComponent> comps;
  std::size_t total = 0;
  for (int k = 0; k <= s; ++k) {
    comps.push_back(generate_component(n, k, budget));
    total += comps.back().size();
    if (total > budget) throw BudgetError("assemble: vertex budget exceeded");
  }

  std::vector<std::vector<int>> gid(s + 1);
  for (int k = 0; k <= s; ++k) {
    gid[k].resize(comps[k].size());
    for (int v = 0; v < comps[k].size(); ++v) {
      Tableau filled = fill(comps[k].vertices[v], s);
      if (!in_T_s(filled, s)) throw Error("assemble: fill left T(s)");
      int id = c.size();
      auto [it, inserted] = c.index.emplace(filled, id);
      if (!inserted) throw Error("assemble: fill is not injective");
      c.filled.push_back(std::move(filled));
      c.dropped.push_back(comps[k].vertices[v]);
      c.component.push_back(k);
      gid[k][v] = id;
    }
  }

  int V = c.size();
  c.f.assign(n + 1, std::vector<int>(V, -1));
  c.e.assign(n + 1, std::vector<int>(V, -1));
  for (int k = 0; k <= s; ++k)
    for (int v = 0; v < comps[k].size(); ++v)
      for (int i = 1; i <= n; ++i) {
        if (comps[k].f[v][i] >= 0) c.f[i][gid[k][v]] = gid[k][comps[k].f[v][i]];
        if (comps[k].e[v][i] >= 0) c.e[i][gid[k][v]] = gid[k][comps[k].e[v][i]];
      }

  c.eps.assign(n + 1, {});
  c.phi.assign(n + 1, {});
  for (int i = 1; i <= n; ++i) fill_string_lengths(i, c);

  build_branching(c);

  // Minimal ell with iota_k^ell defined, walking down one step at a time.
  c.ell_of.assign(V, -1);
  for (int v = 0; v < V; ++v) {
    Tableau cur = c.filled[v];
    int k = c.component[v];
    while (k > 0) {
      auto down = iota(cur, k, k - 1, s);
      if (!down) break;
      cur = *down;
      --k;
    }
    c.ell_of[v] = k;
  }

  c.sigma_of.assign(V, -1);
  for (int v = 0; v < V; ++v) c.sigma_of[v] = sigma_vertex(c, v);
  for (int v = 0; v < V; ++v)
    if (c.sigma_of[c.sigma_of[v]] != v) throw Error("assemble: sigma is not an involution");

  // f0 = sigma f1 sigma, e0 = sigma e1 sigma.
  for (int v = 0; v < V; ++v) {
    int sv = c.sigma_of[v];
    int fw = c.f[1][sv];
    if (fw >= 0) c.f[0][v] = c.sigma_of[fw];
    int ew = c.e[1][sv];
    if (ew >= 0) c.e[0][v] = c.sigma_of[ew];
  }
  fill_string_lengths(0, c);
  return c;
}

std::string crystal_json(const AffineCrystal& c, const std::vector<int>* energy) {
  nlohmann::json j;
  j["n"] = c.n;
  j["s"] = c.s;
  nlohmann::json verts = nlohmann::json::array();
  for (int v = 0; v < c.size(); ++v) {
    nlohmann::json jv;
    jv["id"] = v;
    jv["tableau"] = nlohmann::json{{"n", c.n}, {"top", c.filled[v].top},
                                   {"bottom", c.filled[v].bottom}};
    jv["component"] = c.component[v];
    jv["rank"] = c.bc.vertices[c.bc_of[v]].rank;
    nlohmann::json epsv = nlohmann::json::array(), phiv = nlohmann::json::array();
    for (int i = 0; i <= c.n; ++i) {
      epsv.push_back(c.eps[i][v]);
      phiv.push_back(c.phi[i][v]);
    }
    jv["eps"] = epsv;
    jv["phi"] = phiv;
    if (energy)
      jv["energy"] = (*energy)[v];
    else
      jv["energy"] = nullptr;
    verts.push_back(jv);
  }
  j["vertices"] = verts;
  nlohmann::json edges = nlohmann::json::array();
  for (int i = 0; i <= c.n; ++i)
    for (int v = 0; v < c.size(); ++v)
      if (c.f[i][v] >= 0)
        edges.push_back(nlohmann::json{{"src", v}, {"dst", c.f[i][v]}, {"color", i}});
  j["edges"] = edges;
  if (!energy) j["energy_omitted"] = "tensor square exceeds the vertex budget";
  return j.dump(2);
}

std::string crystal_dot(const AffineCrystal& c) {
  std::ostringstream os;
  os << "digraph affine_crystal {\n  rankdir=TB;\n";
  for (int v = 0; v < c.size(); ++v) {
    std::string label;
    const Tableau& t = c.filled[v];
    for (int i = 0; i < t.width(); ++i) label += (i ? " " : "") + letter_str(t.top[i]);
    label += " / ";
    for (int i = 0; i < t.width(); ++i) label += (i ? " " : "") + letter_str(t.bottom[i]);
    os << "  v" << v << " [label=\"" << label << "\"];\n";
  }
  for (int i = 0; i <= c.n; ++i)
    for (int v = 0; v < c.size(); ++v)
      if (c.f[i][v] >= 0)
        os << "  v" << v << " -> v" << c.f[i][v] << " [label=" << i << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace krc
