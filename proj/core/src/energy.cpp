#include "krc/energy.hpp"

#include <deque>

namespace krc {

namespace {

// Sign of the local energy step across a 0-arrow out of pair p (Eq. for
// H(e0(b2 (x) b1))): -1 / +1 / 0 depending on which factor e0 and f0
// act on, on both sides of the R-matrix.
int h_step(const RMatrix& r, int p) {
  auto [v2, v1] = r.split_src(p);
  auto [w1, w2] = r.split_img(r.image[p]);
  const AffineCrystal &B2 = *r.B2, &B1 = *r.B1;
  bool left_src = B2.eps[0][v2] > B1.phi[0][v1];
  bool left_img = B1.eps[0][w1] > B2.phi[0][w2];
  if (left_src && left_img) return -1;
  if (!left_src && !left_img) return 1;
  return 0;
}

}  // namespace

int tensor_f(int color, const AffineCrystal& B2, const AffineCrystal& B1, int v2,
             int v1) {
  if (B2.eps[color][v2] >= B1.phi[color][v1]) {
    int w = B2.f[color][v2];
    return w < 0 ? -1 : w * B1.size() + v1;
  }
  int w = B1.f[color][v1];
  return w < 0 ? -1 : v2 * B1.size() + w;
}

int tensor_e(int color, const AffineCrystal& B2, const AffineCrystal& B1, int v2,
             int v1) {
  if (B2.eps[color][v2] > B1.phi[color][v1]) {
    int w = B2.e[color][v2];
    return w < 0 ? -1 : w * B1.size() + v1;
  }
  int w = B1.e[color][v1];
  return w < 0 ? -1 : v2 * B1.size() + w;
}

RMatrix rmatrix(const AffineCrystal& B2, const AffineCrystal& B1, bool verify) {
  if (B2.n != B1.n) throw Error("rmatrix: rank mismatch");
  int n = B2.n;
  RMatrix r;
  r.B2 = &B2;
  r.B1 = &B1;
  long long total = static_cast<long long>(B2.size()) * B1.size();
  r.image.assign(total, -1);
  r.H.assign(total, 0);

  int u2 = B2.hw_vertex(B2.s), u1 = B1.hw_vertex(B1.s);
  int start = u2 * B1.size() + u1;
  r.image[start] = u1 * B2.size() + u2;
  r.H[start] = 0;

  std::deque<int> queue{start};
  long long reached = 1;
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    auto [v2, v1] = r.split_src(p);
    auto [w1, w2] = r.split_img(r.image[p]);
    for (int i = 0; i <= n; ++i) {
      int q = tensor_f(i, B2, B1, v2, v1);
      if (q >= 0 && r.image[q] < 0) {
        int rq = tensor_f(i, B1, B2, w1, w2);
        if (rq < 0) throw InconsistentError("rmatrix: image string too short");
        r.image[q] = rq;
        // Crossing the 0-arrow from p to q = f0(p): H(p) = H(q) + step(q).
        r.H[q] = i == 0 ? r.H[p] - h_step(r, q) : r.H[p];
        queue.push_back(q);
        ++reached;
      }
      q = tensor_e(i, B2, B1, v2, v1);
      if (q >= 0 && r.image[q] < 0) {
        int rq = tensor_e(i, B1, B2, w1, w2);
        if (rq < 0) throw InconsistentError("rmatrix: image string too short");
        r.image[q] = rq;
        r.H[q] = i == 0 ? r.H[p] + h_step(r, p) : r.H[p];
        queue.push_back(q);
        ++reached;
      }
    }
  }
  if (reached != total)
    throw DisconnectedError("rmatrix: tensor product not connected, " +
                            std::to_string(reached) + " of " + std::to_string(total));

  if (verify) {
    for (int p = 0; p < total; ++p) {
      auto [v2, v1] = r.split_src(p);
      auto [w1, w2] = r.split_img(r.image[p]);
      for (int i = 0; i <= n; ++i) {
        int q = tensor_f(i, B2, B1, v2, v1);
        int rq = tensor_f(i, B1, B2, w1, w2);
        if ((q < 0) != (rq < 0) || (q >= 0 && r.image[q] != rq))
          throw InconsistentError("rmatrix: does not commute with f" +
                                  std::to_string(i));
        if (q >= 0) {
          if (i == 0) {
            if (r.H[p] != r.H[q] + h_step(r, q))
              throw InconsistentError("rmatrix: local energy recurrence violated");
          } else if (r.H[p] != r.H[q]) {
            throw InconsistentError("rmatrix: H not constant on a classical edge");
          }
        }
      }
    }
  }
  return r;
}

int b_natural(const AffineCrystal& b) {
  AffineWeight target(b.n + 1, 0);
  target[0] = b.s;
  int found = -1;
  for (int v = 0; v < b.size(); ++v)
    if (b.phi_weight(v) == target) {
      if (found >= 0) throw Error("b_natural: not unique");
      found = v;
    }
  if (found < 0) throw Error("b_natural: no vertex with phi = s Lambda_0");
  return found;
}

std::vector<int> intrinsic_energy_table(const AffineCrystal& b) {
  RMatrix r = rmatrix(b, b, /*verify=*/false);
  int nat = b_natural(b);
  int u = b.hw_vertex(b.s);
  int base = r.H[r.pair_id(u, nat)];
  std::vector<int> d(b.size());
  for (int v = 0; v < b.size(); ++v) d[v] = r.H[r.pair_id(v, nat)] - base;
  return d;
}

TensorEnergy::TensorEnergy(std::vector<const AffineCrystal*> factors_l_first)
    : factors_(std::move(factors_l_first)) {
  if (factors_.empty()) throw Error("TensorEnergy: no factors");
  for (auto* b : factors_)
    if (!intrinsic_.count(b)) intrinsic_[b] = intrinsic_energy_table(*b);
}

const RMatrix& TensorEnergy::rmat(const AffineCrystal* B2,
                                  const AffineCrystal* B1) const {
  auto key = std::make_pair(B2, B1);
  auto it = cache_.find(key);
  if (it == cache_.end())
    it = cache_.emplace(key, rmatrix(*B2, *B1, /*verify=*/false)).first;
  return it->second;
}

long long TensorEnergy::intrinsic_energy(const std::vector<int>& b) const {
  int L = static_cast<int>(factors_.size());
  if (static_cast<int>(b.size()) != L) throw Error("intrinsic_energy: arity mismatch");
  long long total = 0;

  // Apply R_m (positions m, m+1 counted from the right; index of
  // position m is L - m in the leftmost-first vectors).
  auto apply_r = [&](std::vector<const AffineCrystal*>& types, std::vector<int>& v,
                     int m) {
    int left = L - m - 1, right = L - m;
    const RMatrix& r = rmat(types[left], types[right]);
    auto [w1, w2] = r.split_img(r.image[v[left] * types[right]->size() + v[right]]);
    std::swap(types[left], types[right]);
    v[left] = w1;
    v[right] = w2;
  };

  // sum_j D_{B_j} R_1 ... R_{j-1}
  for (int j = 1; j <= L; ++j) {
    auto types = factors_;
    auto v = b;
    for (int m = j - 1; m >= 1; --m) apply_r(types, v, m);
    total += intrinsic_.at(types[L - 1])[v[L - 1]];
  }
  // sum_{i<j} H_i R_{i+1} ... R_{j-1}
  for (int i = 1; i < L; ++i)
    for (int j = i + 1; j <= L; ++j) {
      auto types = factors_;
      auto v = b;
      for (int m = j - 1; m >= i + 1; --m) apply_r(types, v, m);
      int left = L - i - 1, right = L - i;
      const RMatrix& r = rmat(types[left], types[right]);
      total += r.H[v[left] * types[right]->size() + v[right]];
    }
  return total;
}

bool TensorEnergy::classically_restricted(const std::vector<int>& b) const {
  int n = factors_.front()->n;
  for (int i = 1; i <= n; ++i) {
    // Bracket scan over the factor (eps, phi) pairs, leftmost first.
    int unmatched_plus = 0;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      int ph = factors_[k]->phi[i][b[k]];
      int ep = factors_[k]->eps[i][b[k]];
      unmatched_plus -= ph;
      if (unmatched_plus < 0) unmatched_plus = 0;
      unmatched_plus += ep;
    }
    if (unmatched_plus > 0) return false;
  }
  return true;
}

ClassicalWeight TensorEnergy::tuple_weight(const std::vector<int>& b) const {
  int n = factors_.front()->n;
  ClassicalWeight w(n, 0);
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    ClassicalWeight wk = weight(factors_[k]->filled[b[k]]);
    for (int i = 0; i < n; ++i) w[i] += wk[i];
  }
  return w;
}

Polynomial TensorEnergy::one_dim_sum(const ClassicalWeight& lambda) const {
  int L = static_cast<int>(factors_.size());
  Polynomial x;
  std::vector<int> b(L, 0);
  while (true) {
    if (tuple_weight(b) == lambda && classically_restricted(b))
      x[static_cast<int>(intrinsic_energy(b))] += 1;
    int pos = L - 1;
    while (pos >= 0 && b[pos] + 1 >= factors_[pos]->size()) b[pos--] = 0;
    if (pos < 0) break;
    ++b[pos];
  }
  return x;
}

}  // namespace krc
