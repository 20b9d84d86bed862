#include "krc/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "krc/energy.hpp"
#include "krc/plactic.hpp"
#include "krc/shape_maps.hpp"
#include "krc/verify.hpp"

namespace krc {

namespace {

void emit(const RunConfig& config, std::ostream& out, const std::string& artifact) {
  if (config.out.empty()) {
    out << artifact;
    if (!artifact.empty() && artifact.back() != '\n') out << "\n";
    return;
  }
  std::ofstream file(config.out);
  if (!file) throw Error("cannot open output file " + config.out);
  file << artifact;
}

ClassicalWeight parse_lambda(const std::string& text, int n) {
  if (text.empty()) throw Error("missing --lambda");
  auto w_pos = text.find('w');
  if (w_pos != std::string::npos && text.substr(w_pos) == "w2") {
    int k = std::stoi(text.substr(0, w_pos));
    if (k < 0) throw Error("negative multiple of w2");
    return k_omega2(k, n);
  }
  // Comma-separated coefficients of the classical fundamental weights.
  std::vector<int> m;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) m.push_back(std::stoi(item));
  if (static_cast<int>(m.size()) != n)
    throw Error("--lambda needs " + std::to_string(n) + " coefficients");
  if ((m[n - 2] + m[n - 1]) % 2 != 0)
    throw Error("--lambda: spin coefficients of unequal parity give no integral weight");
  ClassicalWeight w(n, 0);
  int spin_sum = (m[n - 2] + m[n - 1]) / 2;
  for (int j = 0; j < n - 2; ++j) {
    int acc = 0;
    for (int i = j; i < n - 2; ++i) acc += m[i];
    w[j] = acc + spin_sum;
  }
  w[n - 2] = spin_sum;
  w[n - 1] = (m[n - 1] - m[n - 2]) / 2;
  return w;
}

std::string rmatrix_json(const AffineCrystal& c, const RMatrix& r) {
  nlohmann::json j;
  j["n"] = c.n;
  j["s"] = c.s;
  j["pairs"] = r.image.size();
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t p = 0; p < r.image.size(); ++p) {
    auto [v2, v1] = r.split_src(static_cast<int>(p));
    auto [w1, w2] = r.split_img(r.image[p]);
    entries.push_back(nlohmann::json{
        {"src", {v2, v1}}, {"dst", {w1, w2}}, {"H", r.H[p]}});
  }
  j["entries"] = entries;
  return j.dump(2);
}

std::string bc_json(const AffineCrystal& c) {
  nlohmann::json j;
  j["n"] = c.n;
  j["s"] = c.s;
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& bv : c.bc.vertices)
    verts.push_back(nlohmann::json{{"component", bv.component},
                                   {"shape", {bv.shape.p1, bv.shape.p2}},
                                   {"rank", bv.rank},
                                   {"size", bv.members.size()}});
  j["vertices"] = verts;
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : c.bc.edges) edges.push_back(nlohmann::json{a, b});
  j["edges"] = edges;
  return j.dump(2);
}

std::string polynomial_json(const Polynomial& p) {
  nlohmann::json j = nlohmann::json::object();
  for (auto [exp, coeff] : p) j[std::to_string(exp)] = coeff;
  return j.dump();
}

struct ExampleOutcome {
  std::string id;
  bool ok = true;
  std::string trace;
};

ExampleOutcome example_signature() {
  ExampleOutcome ex{"signature", true, ""};
  std::ostringstream tr;
  Tableau t = make_tableau(4, {1, 2, 4, -3, -3}, {3, -4, -4, -2, -1});
  auto w = column_word(t);
  Signature s2 = signature(2, w, 4);
  Signature s4 = signature(4, w, 4);
  tr << "2-signature: " << s2.symbols << " reduced -^" << s2.phi << " +^" << s2.eps
     << "\n4-signature: " << s4.symbols << " reduced -^" << s4.phi << " +^" << s4.eps
     << "\n";
  ex.ok &= s2.symbols == "+-+--" && s2.phi == 1 && s2.eps == 0;
  ex.ok &= s4.symbols == "-++-++" && s4.phi == 1 && s4.eps == 3;
  auto f2 = tab_f(2, t), f4 = tab_f(4, t), e4 = tab_e(4, t);
  ex.ok &= f2 && *f2 == make_tableau(4, {1, 2, 4, -3, -2}, {3, -4, -4, -2, -1});
  ex.ok &= f4 && *f4 == make_tableau(4, {1, 2, 4, -3, -3}, {-4, -4, -4, -2, -1});
  ex.ok &= e4 && *e4 == make_tableau(4, {1, 2, 4, -3, -3}, {3, 3, -4, -2, -1});
  if (f2) tr << "f2:\n" << tableau_pretty(*f2) << "\n";
  if (f4) tr << "f4:\n" << tableau_pretty(*f4) << "\n";
  if (e4) tr << "e4:\n" << tableau_pretty(*e4) << "\n";
  ex.trace = tr.str();
  return ex;
}

ExampleOutcome example_dual() {
  ExampleOutcome ex{"dual", true, ""};
  SkewTableau t{4, 0, {1, 1, 2}, {-3}};
  SkewTableau d = dual_star_two_row(t);
  SkewTableau expected{4, 0, {3, -1, -1}, {-2}};
  ex.ok = d == expected;
  ex.trace = skew_pretty(t) + "\n ->\n" + skew_pretty(d) + "\n";
  return ex;
}

ExampleOutcome example_drop() {
  ExampleOutcome ex{"drop", true, ""};
  Tableau t = make_tableau(4, {1, 2, 3, 3}, {-4, -2, -2, -1});
  DropResult d = drop(t, 4);
  ex.ok = d.dropped == make_tableau(4, {1, 3, 3}, {-4, -2, -1}) && d.k == 3;
  ex.trace = tableau_pretty(t) + "\n -> k=" + std::to_string(d.k) + "\n" +
             tableau_pretty(d.dropped) + "\n";
  return ex;
}

ExampleOutcome example_fill() {
  ExampleOutcome ex{"fill", true, ""};
  std::ostringstream tr;
  Tableau a = make_tableau(4, {1, 2, 3}, {-4, -2, -1});
  Tableau fa = fill(a, 4);
  ex.ok &= fa == make_tableau(4, {1, 2, 2, 3}, {-4, -2, -2, -1});
  tr << tableau_pretty(a) << "\n ->\n" << tableau_pretty(fa) << "\n";
  Tableau b = make_tableau(4, {2, 3, 3}, {-4, -2, -1});
  Tableau fb = fill(b, 4);
  ex.ok &= fb == make_tableau(4, {2, 2, 3, 3}, {-4, -2, -2, -1});
  tr << tableau_pretty(b) << "\n ->\n" << tableau_pretty(fb) << "\n";
  ex.trace = tr.str();
  return ex;
}

ExampleOutcome example_iota() {
  ExampleOutcome ex{"lecouvey-iota", true, ""};
  std::ostringstream tr;
  Tableau t = make_tableau(4, {1, 1, 2, 2, 2, -3, -2}, {2, 2, 3, -2, -2, -2, -1});
  IotaTrace steps = iota_up_trace(t, 5, 6, 7);
  ex.ok &= steps.after_drop == make_tableau(4, {1, 1, 2, -3, -2}, {2, 2, 3, -2, -1});
  ex.ok &= steps.stripped == SkewTableau{4, 2, {2, -3, -2}, {2, 2, 3, -2}};
  ex.ok &= steps.slid == SkewTableau{4, 3, {3, -3, -2}, {2, 2, 3, -3}};
  ex.ok &= steps.refilled ==
           make_tableau(4, {1, 1, 1, 3, -3, -2}, {2, 2, 3, -3, -1, -1});
  ex.ok &= steps.result ==
           make_tableau(4, {1, 1, 1, 3, 3, -3, -2}, {2, 2, 3, -3, -3, -1, -1});
  tr << "(1) drop:\n" << tableau_pretty(steps.after_drop) << "\n(2) strip:\n"
     << skew_pretty(steps.stripped) << "\n(3) slide:\n" << skew_pretty(steps.slid)
     << "\n(4) refill:\n" << tableau_pretty(steps.refilled) << "\n(5) fill:\n"
     << tableau_pretty(steps.result) << "\n";
  ex.trace = tr.str();
  return ex;
}

int run_examples(const RunConfig& config, std::ostream& out) {
  std::vector<ExampleOutcome> outcomes;
  auto want = [&](const std::string& id) {
    return config.example_id.empty() || config.example_id == id;
  };
  if (want("signature")) outcomes.push_back(example_signature());
  if (want("dual")) outcomes.push_back(example_dual());
  if (want("drop")) outcomes.push_back(example_drop());
  if (want("fill")) outcomes.push_back(example_fill());
  if (want("lecouvey-iota")) outcomes.push_back(example_iota());
  if (outcomes.empty()) throw Error("unknown example id " + config.example_id);
  std::ostringstream all;
  bool ok = true;
  for (const auto& ex : outcomes) {
    all << "== " << ex.id << " : " << (ex.ok ? "ok" : "MISMATCH") << "\n"
        << ex.trace;
    ok &= ex.ok;
  }
  emit(config, out, all.str());
  return ok ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "example") return run_examples(config, out);
    if (config.n < 4) throw Error("type D_n needs n >= 4");
    if (config.s < 1) throw Error("s must be positive");
    if (config.budget == 0) throw Error("budget must be positive");

    if (config.command == "build") {
      AffineCrystal c = assemble(config.n, config.s, config.budget);
      if (config.format == "dot") {
        emit(config, out, crystal_dot(c));
      } else {
        long long pairs = static_cast<long long>(c.size()) * c.size();
        if (pairs <= static_cast<long long>(config.budget)) {
          auto d = intrinsic_energy_table(c);
          emit(config, out, crystal_json(c, &d));
        } else {
          emit(config, out, crystal_json(c, nullptr));
        }
      }
      return 0;
    }
    if (config.command == "verify") {
      AffineCrystal c = assemble(config.n, config.s, config.budget);
      long long pairs = static_cast<long long>(c.size()) * c.size();
      if (pairs > static_cast<long long>(config.budget))
        throw BudgetError("verify: tensor square exceeds the vertex budget");
      Report rep = verify_all(c);
      emit(config, out, rep.to_json());
      return rep.all_pass() ? 0 : 1;
    }
    if (config.command == "bc-graph") {
      AffineCrystal c = assemble(config.n, config.s, config.budget);
      emit(config, out, config.format == "dot" ? bc_dot(c) : bc_json(c));
      return 0;
    }
    if (config.command == "rmatrix") {
      AffineCrystal c = assemble(config.n, config.s, config.budget);
      long long pairs = static_cast<long long>(c.size()) * c.size();
      if (pairs > static_cast<long long>(config.budget))
        throw BudgetError("rmatrix: tensor square exceeds the vertex budget");
      RMatrix r = rmatrix(c, c);
      emit(config, out, rmatrix_json(c, r));
      return 0;
    }
    if (config.command == "energy") {
      AffineCrystal c = assemble(config.n, config.s, config.budget);
      long long pairs = static_cast<long long>(c.size()) * c.size();
      if (pairs > static_cast<long long>(config.budget))
        throw BudgetError("energy: tensor square exceeds the vertex budget");
      auto d = intrinsic_energy_table(c);
      nlohmann::json j;
      j["n"] = config.n;
      j["s"] = config.s;
      j["b_natural"] = b_natural(c);
      j["D"] = d;
      emit(config, out, j.dump(2));
      return 0;
    }
    if (config.command == "xsum") {
      AffineCrystal c = assemble(config.n, config.s, config.budget);
      double tuples = 1;
      for (int i = 0; i < config.factors; ++i) tuples *= c.size();
      if (tuples > static_cast<double>(config.budget))
        throw BudgetError("xsum: tuple count exceeds the vertex budget");
      std::vector<const AffineCrystal*> factors(config.factors, &c);
      TensorEnergy te(factors);
      ClassicalWeight lambda = parse_lambda(config.lambda, config.n);
      Polynomial x = te.one_dim_sum(lambda);
      nlohmann::json j;
      j["n"] = config.n;
      j["s"] = config.s;
      j["factors"] = config.factors;
      j["lambda"] = lambda;
      j["polynomial"] = nlohmann::json::parse(polynomial_json(x));
      emit(config, out, j.dump(2));
      return 0;
    }
    throw Error("unknown command " + config.command);
  } catch (const std::exception& e) {
    nlohmann::json j;
    j["error"] = e.what();
    j["command"] = config.command;
    err << j.dump() << "\n";
    return 2;
  }
}

}  // namespace krc
