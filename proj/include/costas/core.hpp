#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace costas {

/// A bijection on {1..n}. The permutation array is s(i, j) = [sigma(j) == i].
/// All values are 1-based; the constructor rejects anything that is not a
/// bijection.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int order);

  int order() const { return static_cast<int>(values_.size()); }
  /// sigma(j) for 1 <= j <= order().
  int operator()(int j) const { return values_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<int>& values() const { return values_; }

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.values_ <=> b.values_;
  }

private:
  struct Unchecked {};
  Permutation(std::vector<int> values, Unchecked) : values_(std::move(values)) {}
  friend Permutation make_unchecked(std::vector<int> values);

  std::vector<int> values_;
};

/// Builds a permutation without validation. Callers must guarantee bijectivity.
Permutation make_unchecked(std::vector<int> values);

std::string to_string(const Permutation& perm);
std::ostream& operator<<(std::ostream& os, const Permutation& perm);

/// One 1-entry of a permutation cube in row form: for row i, d(i, j, k) = 1.
struct CubeRow {
  int j = 0;
  int k = 0;
  friend auto operator<=>(const CubeRow&, const CubeRow&) = default;
};

struct Triple {
  int i = 0;
  int j = 0;
  int k = 0;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Sparse order-n permutation cube: row i holds the unique (j_i, k_i) with
/// d(i, j_i, k_i) = 1. Both j and k sequences are bijections on {1..n}.
/// Whether the cube is Costas is a separate question, see is_costas_cube().
class CostasCube {
public:
  CostasCube() = default;
  /// rows[i - 1] = (j_i, k_i).
  explicit CostasCube(std::vector<CubeRow> rows);
  /// Triples in any order; every i in 1..n must appear exactly once.
  static CostasCube from_triples(std::vector<Triple> triples);
  /// Diagonal cube with 1s at (i, i, i).
  static CostasCube diagonal(int order);

  int order() const { return static_cast<int>(rows_.size()); }
  const CubeRow& row(int i) const { return rows_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<CubeRow>& rows() const { return rows_; }
  /// Triples sorted by i.
  std::vector<Triple> triples() const;

  friend bool operator==(const CostasCube&, const CostasCube&) = default;
  friend auto operator<=>(const CostasCube& a, const CostasCube& b) {
    return a.rows_ <=> b.rows_;
  }

private:
  struct Unchecked {};
  CostasCube(std::vector<CubeRow> rows, Unchecked) : rows_(std::move(rows)) {}
  friend CostasCube make_unchecked_cube(std::vector<CubeRow> rows);

  std::vector<CubeRow> rows_;
};

CostasCube make_unchecked_cube(std::vector<CubeRow> rows);

std::ostream& operator<<(std::ostream& os, const CostasCube& cube);

/// Projections as permutations: a(j) = i, b(k) = i, c(k) = j for every 1-entry
/// (i, j, k) of the cube.
struct ProjectionTriple {
  Permutation a;
  Permutation b;
  Permutation c;
  friend bool operator==(const ProjectionTriple&, const ProjectionTriple&) = default;
};

enum class ProjectionPair { AB, AC, BC };

/// Difference vector (dj, di) joining two 1-entries, dj > 0.
struct DifferenceVector {
  int dj = 0;
  int di = 0;
  friend bool operator==(const DifferenceVector&, const DifferenceVector&) = default;
};

/// Largest out-of-phase aperiodic autocorrelation of the permutation array.
int max_offphase_autocorrelation(const Permutation& perm);

bool is_costas(const Permutation& perm);

/// is_costas() on a raw 1-based value sequence already known to be a bijection.
bool is_costas_sequence(std::span<const int> values);

/// First difference vector (in column-pair scan order) that repeats, if any.
std::optional<DifferenceVector> repeated_difference_vector(const Permutation& perm);

ProjectionTriple projections(const CostasCube& cube);

/// Unique permutation cube whose Projections A and B are `a` and `b`.
CostasCube cube_from_projections(const Permutation& a, const Permutation& b);

CostasCube cube_from_pair(ProjectionPair which, const Permutation& x, const Permutation& y);

bool is_costas_cube(const CostasCube& cube);

std::size_t hash_combine(std::size_t seed, std::size_t value);

} // namespace costas

template <>
struct std::hash<costas::Permutation> {
  std::size_t operator()(const costas::Permutation& p) const noexcept;
};

template <>
struct std::hash<costas::CostasCube> {
  std::size_t operator()(const costas::CostasCube& c) const noexcept;
};
