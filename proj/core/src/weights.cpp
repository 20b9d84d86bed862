#include "krc/weights.hpp"

#include "krc/letters.hpp"

namespace krc {

std::vector<int> c_coefficients(int n) {
  std::vector<int> c(n + 1, 2);
  c[0] = c[1] = c[n - 1] = c[n] = 1;
  return c;
}

int level(const AffineWeight& w) {
  int n = static_cast<int>(w.size()) - 1;
  auto c = c_coefficients(n);
  int lev = 0;
  for (int i = 0; i <= n; ++i) lev += c[i] * w[i];
  return lev;
}

bool dynkin_adjacent(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  if (i == j) return false;
  if (j == 2 && (i == 0 || i == 1)) return true;
  if (i >= 2 && j == i + 1 && j <= n - 2) return true;
  if (i == n - 2 && (j == n - 1 || j == n)) return true;
  return false;
}

int cartan(int i, int j, int n) {
  if (i == j) return 2;
  return dynkin_adjacent(i, j, n) ? -1 : 0;
}

int pair_h_classical(int i, const ClassicalWeight& w) {
  int n = static_cast<int>(w.size());
  if (i < 1 || i > n) throw Error("pair_h_classical: color out of range");
  if (i < n) return w[i - 1] - w[i];
  return w[n - 2] + w[n - 1];
}

AffineWeight classical_to_affine(const ClassicalWeight& w, int k0) {
  int n = static_cast<int>(w.size());
  AffineWeight a(n + 1, 0);
  a[0] = k0;
  for (int i = 1; i <= n; ++i) a[i] = pair_h_classical(i, w);
  return a;
}

std::vector<AffineWeight> level_weights(int n, int ell) {
  auto c = c_coefficients(n);
  std::vector<AffineWeight> out;
  AffineWeight cur(n + 1, 0);
  auto rec = [&](auto&& self, int i, int rest) -> void {
    if (i == n) {
      if (rest % c[n] == 0 && rest / c[n] >= 0) {
        cur[n] = rest / c[n];
        out.push_back(cur);
      }
      return;
    }
    for (int k = 0; c[i] * k <= rest; ++k) {
      cur[i] = k;
      self(self, i + 1, rest - c[i] * k);
    }
    cur[i] = 0;
  };
  rec(rec, 0, ell);
  return out;
}

ClassicalWeight k_omega2(int k, int n) {
  ClassicalWeight w(n, 0);
  w[0] = w[1] = k;
  return w;
}

}  // namespace krc
