#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "costas/core.hpp"

namespace costas {

/// Largest order enumerated in-process unless the caller raises the limit.
inline constexpr int kDefaultEnumerationLimit = 13;

/// One row of the cube/array class census for an order.
struct ClassReport {
  int order = 0;
  std::size_t cube_classes = 0;
  std::size_t projection_array_classes = 0;
  std::size_t total_array_classes = 0;
  std::vector<CostasCube> representatives; // canonical, sorted
};

/// All Costas permutations of order n in lexicographic order (backtracking
/// with incremental difference-vector pruning). Throws std::length_error
/// above `limit`.
std::vector<Permutation> enumerate_costas_arrays(int n, int limit = kDefaultEnumerationLimit,
                                                 int threads = 1);

/// One canonical representative per D4 class, sorted.
std::vector<Permutation> costas_classes(std::span<const Permutation> arrays);

std::vector<Permutation> enumerate_costas_classes(int n, int limit = kDefaultEnumerationLimit,
                                                  int threads = 1);

/// Validation of an externally supplied array list for one order.
struct ArraySetCheck {
  bool all_costas = true;
  bool uniform_order = true;
  bool closed_under_d4 = true;
  std::size_t first_bad_index = 0; // first non-Costas or wrong-order entry
  std::size_t distinct = 0;
  std::size_t duplicates = 0; // repeated entries; tolerated and dropped
  std::size_t classes = 0;
  std::size_t orbit_total = 0; // sum of class sizes over the classes present
  bool ok() const { return all_costas && uniform_order && closed_under_d4 && distinct == orbit_total; }
};

ArraySetCheck check_array_set(std::span<const Permutation> arrays, int order);

/// Every distinct D4 image of every array, sorted.
std::vector<Permutation> expand_d4(std::span<const Permutation> arrays);

enum class PairJoinMode {
  /// Every ordered pair (A, B).
  Literal,
  /// A restricted to canonical class representatives.
  ReducedByA,
};

/// Canonical representatives of all Costas cube classes of order n built from
/// the complete list of order-n Costas arrays by joining projection pairs.
/// Throws std::invalid_argument if `arrays` fails check_array_set().
std::vector<CostasCube> enumerate_costas_cubes(int n, std::span<const Permutation> arrays,
                                               PairJoinMode mode = PairJoinMode::Literal,
                                               int threads = 1);

/// Number of D4 classes of arrays occurring in S(D) over the given cubes.
std::size_t projection_class_count(std::span<const CostasCube> cubes);

/// Census of one order from a complete array list.
ClassReport class_report(int n, std::span<const Permutation> arrays,
                         PairJoinMode mode = PairJoinMode::Literal, int threads = 1);

/// Rows for orders 2..max_n by in-process enumeration.
std::vector<ClassReport> table1(int max_n, int limit = kDefaultEnumerationLimit, int threads = 1);

} // namespace costas
