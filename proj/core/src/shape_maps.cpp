#include "krc/shape_maps.hpp"

#include <algorithm>

namespace krc {

namespace {

bool all_one_onebar(const Tableau& t) {
  for (int i = 0; i < t.width(); ++i)
    if (t.top[i] != 1 || t.bottom[i] != -1) return false;
  return true;
}

Tableau erase_columns(const Tableau& t, int start, int count) {
  Tableau out = t;
  out.top.erase(out.top.begin() + start, out.top.begin() + start + count);
  out.bottom.erase(out.bottom.begin() + start, out.bottom.begin() + start + count);
  return out;
}

Tableau insert_columns(const Tableau& t, int at, Letter a, Letter b, int count) {
  Tableau out = t;
  out.top.insert(out.top.begin() + at, count, a);
  out.bottom.insert(out.bottom.begin() + at, count, b);
  return out;
}

}  // namespace

std::optional<AConfiguration> find_a_configuration(const Tableau& t, int s) {
  if (!in_T_s(t, s)) throw Error("find_a_configuration: not in T(s)");
  if (t.width() > 0 && all_one_onebar(t)) return std::nullopt;
  if (classical_legal(t)) return std::nullopt;

  std::optional<AConfiguration> found;
  int i = 0;
  while (i < t.width()) {
    if (t.bottom[i] != bar(t.top[i])) {
      ++i;
      continue;
    }
    Letter a = t.top[i];
    int j = i;
    while (j < t.width() && t.top[j] == a && t.bottom[j] == bar(a)) ++j;
    int run = j - i;
    bool left_shares = i > 0 && t.top[i - 1] == a;
    bool right_shares = j < t.width() && t.bottom[j] == bar(a);
    AConfiguration cfg;
    cfg.a = a;
    if (left_shares || right_shares) {
      cfg.m = run;
      cfg.start = i;
      cfg.variant = left_shares ? 1 : 2;
    } else {
      cfg.m = run - 1;
      cfg.start = i;  // keep one copy: remove [i, i+run-1)
      cfg.variant = 3;
    }
    if (cfg.m > 0) {
      if (found) throw Error("find_a_configuration: not unique");
      found = cfg;
    }
    i = j;
  }
  if (!found)
    throw Error("find_a_configuration: tableau outside B(s varpi_2) has no configuration");
  return found;
}

DropResult drop(const Tableau& t, int s) {
  if (!in_T_s(t, s)) throw Error("drop: not in T(s)");
  if (t.width() > 0 && all_one_onebar(t))
    return {Tableau{t.n, {}, {}}, 0};
  auto cfg = find_a_configuration(t, s);
  if (!cfg) return {t, s};
  Tableau dropped = erase_columns(t, cfg->start, cfg->m);
  if (!classical_legal(dropped)) throw Error("drop: result not classical-legal");
  return {dropped, s - cfg->m};
}

std::vector<int> filling_locations(const Tableau& t) {
  std::vector<int> locs;
  for (int i = 0; i + 1 < t.width(); ++i) {
    Letter a1 = t.top[i], b1 = t.bottom[i];
    Letter a2 = t.top[i + 1], b2 = t.bottom[i + 1];
    bool first = leq(b1, bar(a1), t.n) && leq(bar(a1), b2, t.n);
    bool second = leq(a1, bar(b2), t.n) && leq(bar(b2), a2, t.n);
    if (first || second) locs.push_back(i + 1);
  }
  return locs;
}

Tableau fill(const Tableau& t, int s) {
  int k = t.width();
  if (k > s) throw Error("fill: width exceeds s");
  if (!classical_legal(t)) throw Error("fill: input is not classical-legal");
  if (k == s) return t;
  if (k == 0) {
    Tableau out;
    out.n = t.n;
    out.top.assign(s, 1);
    out.bottom.assign(s, -1);
    return out;
  }
  int count = s - k;
  for (int i = 0; i + 1 < k; ++i) {
    Letter a1 = t.top[i], b1 = t.bottom[i];
    Letter a2 = t.top[i + 1], b2 = t.bottom[i + 1];
    if (leq(b1, bar(a1), t.n) && leq(bar(a1), b2, t.n))
      return insert_columns(t, i + 1, a1, bar(a1), count);
    if (leq(a1, bar(b2), t.n) && leq(bar(b2), a2, t.n))
      return insert_columns(t, i + 1, bar(b2), b2, count);
  }
  Tableau appended = insert_columns(t, k, t.top[k - 1], bar(t.top[k - 1]), count);
  Tableau prepended = insert_columns(t, 0, bar(t.bottom[0]), t.bottom[0], count);
  bool app_ok = in_T_s(appended, s) && !classical_legal(appended);
  bool pre_ok = in_T_s(prepended, s) && !classical_legal(prepended);
  if (app_ok && pre_ok && appended != prepended)
    throw Error("fill: append and prepend disagree");
  if (!app_ok && !pre_ok) throw Error("fill: neither append nor prepend is legal");
  return app_ok ? appended : prepended;
}

Tableau upsilon(const Tableau& t, int s_from, int s_to) {
  if (s_from >= s_to) throw Error("upsilon: needs s' < s");
  return fill(drop(t, s_from).dropped, s_to);
}

IotaTrace iota_up_trace(const Tableau& t, int i, int j, int s) {
  IotaTrace tr;
  DropResult d = drop(t, s);
  if (d.k != i) throw Error("iota: tableau is not in component " + std::to_string(i));
  tr.after_drop = d.dropped;
  Strip st = strip(d.dropped);
  tr.stripped = st.skew;
  SkewTableau slid = st.skew;
  for (int step = 0; step < j - i; ++step) slid = slide_out_once(slid);
  tr.slid = slid;
  tr.refilled = refill(slid, j, st.t1() + (j - i), st.t2() + (j - i));
  tr.result = fill(tr.refilled, s);
  return tr;
}

std::optional<Tableau> iota(const Tableau& t, int i, int j, int s) {
  if (i < 0 || j < 0 || i > s || j > s) throw Error("iota: component out of range");
  if (i == j) return t;
  if (j > i) return iota_up_trace(t, i, j, s).result;

  DropResult d = drop(t, s);
  if (d.k != i) throw Error("iota: tableau is not in component " + std::to_string(i));
  Strip st = strip(d.dropped);
  int steps = i - j;
  if (st.t1() < steps || st.t2() < steps) return std::nullopt;
  SkewTableau slid = st.skew;
  for (int step = 0; step < steps; ++step) {
    auto next = slide_in_once(slid);
    if (!next) return std::nullopt;
    slid = *next;
  }
  Tableau refilled;
  try {
    refilled = refill(slid, j, st.t1() - steps, st.t2() - steps);
  } catch (const Error&) {
    return std::nullopt;
  }
  Tableau candidate = fill(refilled, s);
  // iota_i^j for j < i is the partial inverse of iota_j^i by definition.
  auto roundtrip = iota(candidate, j, i, s);
  if (!roundtrip || *roundtrip != t) return std::nullopt;
  return candidate;
}

}  // namespace krc
