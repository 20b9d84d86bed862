#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

// Weyl dimension formula for D_n, independent of the crystal code: only
// needs the positive roots e_i - e_j and e_i + e_j (i < j).
namespace oracle {

inline long long weyl_dim_d(const std::vector<int>& lambda) {
  int n = static_cast<int>(lambda.size());
  __int128 num = 1, den = 1;
  auto reduce = [&]() {
    __int128 a = num < 0 ? -num : num, b = den < 0 ? -den : den;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int li = lambda[i] + (n - 1 - i), lj = lambda[j] + (n - 1 - j);
      int ri = n - 1 - i, rj = n - 1 - j;
      num *= (li - lj);
      den *= (ri - rj);
      reduce();
      num *= (li + lj);
      den *= (ri + rj);
      reduce();
    }
  return static_cast<long long>(num / den);
}

inline long long weyl_dim_k_omega2(int n, int k) {
  std::vector<int> lambda(n, 0);
  lambda[0] = lambda[1] = k;
  return weyl_dim_d(lambda);
}

}  // namespace oracle
