#pragma once

#include <vector>

namespace krc {

// Weight of a classical D_n crystal element in epsilon coordinates
// (length n); coordinate i is the content #i - #i-bar.
using ClassicalWeight = std::vector<int>;

// Element of P_cl for D_n^(1) as coefficients of Lambda_0..Lambda_n.
using AffineWeight = std::vector<int>;

// Marks of the canonical central element c = h0 + h1 + 2h2 + ... +
// 2h_{n-2} + h_{n-1} + h_n.
std::vector<int> c_coefficients(int n);

// <c, w>
int level(const AffineWeight& w);

// Adjacency in the D_n^(1) Dynkin diagram (0 and 1 both hang off 2,
// n-1 and n both hang off n-2).
bool dynkin_adjacent(int i, int j, int n);

// Cartan matrix entry a_{ij} of D_n^(1).
int cartan(int i, int j, int n);

// <h_i, w> for a classical weight in epsilon coordinates, i = 1..n.
int pair_h_classical(int i, const ClassicalWeight& w);

// Classical part of an affine weight: k_i = <h_i, w> for i = 1..n,
// given epsilon coordinates.
AffineWeight classical_to_affine(const ClassicalWeight& w, int k0);

// All of (P_cl^+)_ell: nonnegative Lambda-coefficient vectors of level
// ell, in lexicographic order.
std::vector<AffineWeight> level_weights(int n, int ell);

// k * varpi_2 in epsilon coordinates.
ClassicalWeight k_omega2(int k, int n);

}  // namespace krc
