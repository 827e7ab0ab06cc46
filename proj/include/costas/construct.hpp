#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "costas/core.hpp"
#include "costas/gf.hpp"

namespace costas {

enum class Family {
  W1,
  G2,
  W2,
  G3,
  CubeG2x3,
  CubeW2W2G2,
  CubeG3I,
  CubeG3II,
  CubeG3, // variants (i) and (ii) pooled, sweeps only
};

std::string_view family_name(Family f);
/// Accepts the names produced by family_name() ("w1", "cube-g2x3", ...).
Family parse_family(std::string_view name);
bool is_cube_family(Family f);

/// A construction together with the parameters that produced it.
struct ConstructionId {
  Family family = Family::W1;
  std::string field;                     // field spec string
  std::vector<gf::FieldElement> elements; // phi, then rho / psi as applicable
  int shift = 0;                         // W1 column shift c

  std::string describe(const gf::Field& f) const;
};

/// Gilbert-Welch: sigma(j) = phi^(j + c), order p - 1.
Permutation w1(const gf::Field& field, gf::FieldElement phi, int c);

/// Golomb: s(i, j) = [phi^i + rho^j = 1], order q - 2.
Permutation g2(const gf::Field& field, gf::FieldElement phi, gf::FieldElement rho);

/// Gilbert-Welch variant: sigma(j) = phi^j - 1, order p - 2.
Permutation w2(const gf::Field& field, gf::FieldElement phi);

/// Golomb variant: s(i, j) = [phi^(i+1) + (1 - phi)^(j+1) = 1], order q - 3.
Permutation g3(const gf::Field& field, gf::FieldElement phi);

/// 1-entries where phi^i + rho^-j = 1, phi^-i + psi^k = 1, rho^j + psi^-k = 1.
CostasCube cube_g2x3(const gf::Field& field, gf::FieldElement phi, gf::FieldElement rho,
                     gf::FieldElement psi);

/// 1-entries where i = phi^j - 1 = -psi^k over a prime field.
CostasCube cube_w2w2g2(const gf::Field& field, gf::FieldElement phi, gf::FieldElement psi);

/// Order q - 3 cube whose projections are all G3 arrays.
CostasCube cube_g3_variant_i(const gf::Field& field, gf::FieldElement phi);

/// Same Projection A as variant (i); B and C are reflected / rotated G3 arrays.
CostasCube cube_g3_variant_ii(const gf::Field& field, gf::FieldElement phi);

struct ReversalResult {
  CostasCube cube;
  bool costas = false;
};

/// Row i of the result takes j from row i and k from row n + 1 - i.
ReversalResult k_reversal(const CostasCube& cube);

/// Canonical cube classes per order produced by a cube family over every
/// admissible parameter tuple, every field with q - offset <= max_order.
/// Throws std::length_error above max_order_limit.
std::map<int, std::set<CostasCube>> sweep(Family family, int max_order, int threads = 1,
                                          int max_order_limit = 29);

struct Table2Row {
  int order = 0;
  std::size_t g2x3 = 0;
  std::size_t w2w2g2 = 0;
  std::size_t g3 = 0; // pooled
  std::size_t g3_i = 0;
  std::size_t g3_ii = 0;
  std::size_t constructed = 0; // union over all families
  std::optional<std::size_t> total;
};

/// Rows for every order <= max_order with at least one constructed class.
std::vector<Table2Row> table2(int max_order, int threads = 1);

/// Canonical array -> construction labels ("W1", "G2", "W2", "G3") for every
/// array of the given order produced by the four array constructions.
std::map<Permutation, std::set<std::string>> catalog(int order);

} // namespace costas
