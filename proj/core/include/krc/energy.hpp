#pragma once

#include <map>

#include "krc/affine_crystal.hpp"

namespace krc {

struct DisconnectedError : Error {
  using Error::Error;
};
struct InconsistentError : Error {
  using Error::Error;
};

// Combinatorial R-matrix B2 (x) B1 -> B1 (x) B2 with the normalized
// local energy H.  Pair (v2, v1) is encoded as v2*|B1|+v1 on the source
// side and (w1, w2) as w1*|B2|+w2 on the image side.
struct RMatrix {
  const AffineCrystal* B2 = nullptr;
  const AffineCrystal* B1 = nullptr;
  std::vector<int> image;
  std::vector<int> H;

  int pair_id(int v2, int v1) const { return v2 * B1->size() + v1; }
  std::pair<int, int> split_src(int p) const { return {p / B1->size(), p % B1->size()}; }
  std::pair<int, int> split_img(int p) const { return {p / B2->size(), p % B2->size()}; }
};

// Tensor operators on an ordered pair of crystals.
int tensor_f(int color, const AffineCrystal& B2, const AffineCrystal& B1, int v2,
             int v1);  // pair id or -1
int tensor_e(int color, const AffineCrystal& B2, const AffineCrystal& B1, int v2,
             int v1);

// Path transport from u(B2) (x) u(B1); throws DisconnectedError if some
// pair is unreachable and InconsistentError if verification fails.
RMatrix rmatrix(const AffineCrystal& B2, const AffineCrystal& B1, bool verify = true);

// Unique vertex with phi(b) = s Lambda_0.
int b_natural(const AffineCrystal& b);

// D_B(b) = H(b (x) b-natural) - H(u(B) (x) b-natural) for every vertex.
std::vector<int> intrinsic_energy_table(const AffineCrystal& b);

using Polynomial = std::map<int, long long>;  // exponent -> coefficient

// Evaluates the tensor intrinsic energy and one-dimensional sums for
// B_L (x) ... (x) B_1; `factors` is leftmost-first, and so are element
// tuples.  R-matrices between the factor crystals are cached.
class TensorEnergy {
 public:
  explicit TensorEnergy(std::vector<const AffineCrystal*> factors_l_first);

  long long intrinsic_energy(const std::vector<int>& b) const;
  bool classically_restricted(const std::vector<int>& b) const;
  ClassicalWeight tuple_weight(const std::vector<int>& b) const;
  Polynomial one_dim_sum(const ClassicalWeight& lambda) const;

  const std::vector<const AffineCrystal*>& factors() const { return factors_; }

 private:
  const RMatrix& rmat(const AffineCrystal* B2, const AffineCrystal* B1) const;

  std::vector<const AffineCrystal*> factors_;
  mutable std::map<std::pair<const AffineCrystal*, const AffineCrystal*>, RMatrix>
      cache_;
  std::map<const AffineCrystal*, std::vector<int>> intrinsic_;
};

}  // namespace krc
