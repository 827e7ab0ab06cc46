#pragma once

#include <array>
#include <set>
#include <vector>

#include "costas/core.hpp"

namespace costas {

/// Element of D4 acting on (i, j) index pairs of an order-n square array.
/// Applied as: optionally swap i and j, then reverse i (x -> n + 1 - x), then
/// reverse j.
struct PlanarSymmetry {
  bool transpose = false;
  bool flip_i = false;
  bool flip_j = false;

  static constexpr PlanarSymmetry identity() { return {}; }
  /// Reflection through a vertical axis: i -> n + 1 - i.
  static constexpr PlanarSymmetry vertical_reflection() { return {false, true, false}; }
  static constexpr PlanarSymmetry horizontal_reflection() { return {false, false, true}; }
  static constexpr PlanarSymmetry rotation_180() { return {false, true, true}; }
  /// Reflection about the main diagonal.
  static constexpr PlanarSymmetry diagonal_reflection() { return {true, false, false}; }
  static constexpr PlanarSymmetry antidiagonal_reflection() { return {true, true, true}; }

  static std::array<PlanarSymmetry, 8> all();

  friend bool operator==(const PlanarSymmetry&, const PlanarSymmetry&) = default;
};

/// (g * h) acts as g after h.
PlanarSymmetry compose(const PlanarSymmetry& g, const PlanarSymmetry& h);

Permutation apply_planar(const PlanarSymmetry& sym, const Permutation& perm);

/// Signed permutation of the three cube axes. Output axis a reads input axis
/// axis_perm[a] and reverses it when flip[a] is set. Axis 0 = i, 1 = j, 2 = k.
struct SymmetryElement {
  std::array<int, 3> axis_perm{0, 1, 2};
  std::array<bool, 3> flip{false, false, false};

  static constexpr SymmetryElement identity() { return {}; }
  static std::array<SymmetryElement, 48> all();
  /// The 24 orientation-preserving elements.
  static std::array<SymmetryElement, 24> rotations();

  /// Determinant of the signed permutation matrix is +1.
  bool is_rotation() const;

  friend bool operator==(const SymmetryElement&, const SymmetryElement&) = default;
  friend auto operator<=>(const SymmetryElement&, const SymmetryElement&) = default;
};

/// (g * h) acts as g after h.
SymmetryElement compose(const SymmetryElement& g, const SymmetryElement& h);
SymmetryElement inverse(const SymmetryElement& g);

CostasCube apply_cube(const SymmetryElement& sym, const CostasCube& cube);

/// Lexicographically least value sequence over the D4 orbit.
Permutation canonical_array(const Permutation& perm);

/// Size of the D4 orbit. For order > 2 this is 4 (diagonal symmetry) or 8.
int array_class_size(const Permutation& perm);

/// Distinct D4 images, sorted.
std::vector<Permutation> array_orbit(const Permutation& perm);

/// Lexicographically least row sequence over the 48 cube symmetries.
CostasCube canonical_cube(const CostasCube& cube);

/// Distinct images under the 48 symmetries, sorted.
std::vector<CostasCube> cube_orbit(const CostasCube& cube);

/// S(D): distinct Projection A values over the orbit of a Costas cube.
/// Throws std::invalid_argument when the cube is not Costas.
std::set<Permutation> projection_set(const CostasCube& cube);

/// Same set computed from the 24 rotations only.
std::set<Permutation> projection_set_rotations(const CostasCube& cube);

} // namespace costas
