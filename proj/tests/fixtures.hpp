#pragma once

// Worked examples, transcribed as listed (rows i, j, k and the
// projection permutations A, B, C).

#include <vector>

#include "costas/core.hpp"

namespace fixtures {

struct Listing {
  std::vector<int> j;
  std::vector<int> k;
  std::vector<int> a;
  std::vector<int> b;
  std::vector<int> c;

  costas::CostasCube cube() const {
    std::vector<costas::CubeRow> rows;
    for (std::size_t idx = 0; idx < j.size(); ++idx) rows.push_back({j[idx], k[idx]});
    return costas::CostasCube(rows);
  }
};

// Order 6, 1s at (1,6,4),(2,4,6),(3,1,2),(4,3,1),(5,2,5),(6,5,3).
inline const Listing kOrder6{
    {6, 4, 1, 3, 2, 5},
    {4, 6, 2, 1, 5, 3},
    {3, 5, 4, 2, 6, 1},
    {4, 3, 6, 1, 5, 2},
    {3, 1, 5, 6, 2, 4},
};

// Order 6 with |S(D)| = 4: 1s at (1,2,4),(2,4,1),(3,5,6),(4,1,2),(5,6,3),(6,3,5).
inline const std::vector<int> kSd4J{2, 4, 5, 1, 6, 3};
inline const std::vector<int> kSd4K{4, 1, 6, 2, 3, 5};
inline const std::vector<std::vector<int>> kSd4Members{
    {2, 4, 5, 1, 6, 3}, {3, 6, 1, 5, 4, 2}, {4, 1, 6, 2, 3, 5}, {5, 3, 2, 6, 1, 4}};

// GF(16) = Z2[x]/<1+x^3+x^4>, phi = x, rho = 1+x^2+x^3, psi = x+x^2+x^3.
inline const Listing kGf16{
    {3, 6, 1, 12, 10, 2, 7, 9, 8, 5, 11, 4, 13, 14},
    {7, 14, 2, 13, 10, 4, 12, 11, 1, 5, 6, 8, 3, 9},
    {3, 6, 1, 12, 10, 2, 7, 9, 8, 5, 11, 4, 13, 14},
    {9, 3, 13, 6, 10, 11, 1, 12, 14, 5, 8, 7, 4, 2},
    {8, 1, 13, 2, 5, 11, 3, 4, 14, 10, 9, 7, 12, 6},
};

// p = 13, phi = 11, psi = 6.
inline const Listing kP13{
    {7, 4, 2, 3, 11, 5, 9, 8, 10, 1, 6},
    {6, 11, 2, 4, 3, 7, 1, 9, 10, 8, 5},
    {10, 3, 4, 2, 6, 11, 1, 8, 7, 9, 5},
    {7, 3, 5, 4, 11, 1, 6, 10, 8, 9, 2},
    {9, 2, 11, 3, 6, 7, 5, 1, 8, 10, 4},
};

// GF(27) = Z3[x]/<1+2x^2+x^3>, phi = 2+2x. Cube D (first G3 variant).
// The listed B row ends in 12, which repeats an earlier entry; every other
// entry equals the j row, and 22 is the only value completing a permutation.
inline const std::vector<int> kGf27DBListed{6,  2,  4,  7,  20, 21, 3,  8, 18, 15, 14, 12,
                                               5,  23, 17, 24, 10, 19, 9, 13, 1,  16, 11, 12};
inline const Listing kGf27D{
    {6, 2, 4, 7, 20, 21, 3, 8, 18, 15, 14, 12, 5, 23, 17, 24, 10, 19, 9, 13, 1, 16, 11, 22},
    {21, 2, 7, 3, 13, 1, 4, 8, 19, 17, 23, 12, 20, 11, 10, 22, 15, 9, 18, 5, 6, 24, 14, 16},
    {21, 2, 7, 3, 13, 1, 4, 8, 19, 17, 23, 12, 20, 11, 10, 22, 15, 9, 18, 5, 6, 24, 14, 16},
    {6, 2, 4, 7, 20, 21, 3, 8, 18, 15, 14, 12, 5, 23, 17, 24, 10, 19, 9, 13, 1, 16, 11, 22},
    {21, 2, 7, 3, 13, 1, 4, 8, 19, 17, 23, 12, 20, 11, 10, 22, 15, 9, 18, 5, 6, 24, 14, 16},
};

// Cube E (second G3 variant), same field and phi.
inline const Listing kGf27E{
    {6, 2, 4, 7, 20, 21, 3, 8, 18, 15, 14, 12, 5, 23, 17, 24, 10, 19, 9, 13, 1, 16, 11, 22},
    {16, 14, 24, 6, 5, 18, 9, 15, 22, 10, 11, 20, 12, 23, 17, 19, 8, 4, 1, 13, 3, 7, 2, 21},
    {21, 2, 7, 3, 13, 1, 4, 8, 19, 17, 23, 12, 20, 11, 10, 22, 15, 9, 18, 5, 6, 24, 14, 16},
    {19, 23, 21, 18, 5, 4, 22, 17, 7, 10, 11, 13, 20, 2, 8, 1, 15, 6, 16, 12, 24, 9, 14, 3},
    {9, 11, 1, 19, 20, 7, 16, 10, 3, 15, 14, 5, 13, 2, 8, 6, 17, 21, 24, 12, 22, 18, 23, 4},
};

} // namespace fixtures
