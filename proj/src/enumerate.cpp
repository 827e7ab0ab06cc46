#include "costas/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "costas/symmetry.hpp"

namespace costas {

namespace {

class Backtracker {
public:
  explicit Backtracker(int n)
      : n_(n), values_(static_cast<std::size_t>(n)), used_value_(static_cast<std::size_t>(n + 1), 0),
        used_vector_(static_cast<std::size_t>(n * (2 * n + 1)), 0) {}

  /// All Costas permutations with sigma(1) = first, lexicographic.
  std::vector<Permutation> run(int first) {
    out_.clear();
    place(0, first);
    return std::move(out_);
  }

private:
  char& vec(int dj, int di) { return used_vector_[static_cast<std::size_t>(dj * (2 * n_ + 1) + di + n_)]; }

  void place(int col, int v) {
    for (int c = 0; c < col; ++c)
      if (vec(col - c, v - values_[static_cast<std::size_t>(c)])) return;
    for (int c = 0; c < col; ++c) vec(col - c, v - values_[static_cast<std::size_t>(c)]) = 1;
    values_[static_cast<std::size_t>(col)] = v;
    used_value_[static_cast<std::size_t>(v)] = 1;
    if (col + 1 == n_) {
      out_.push_back(make_unchecked(values_));
    } else {
      for (int next = 1; next <= n_; ++next)
        if (!used_value_[static_cast<std::size_t>(next)]) place(col + 1, next);
    }
    used_value_[static_cast<std::size_t>(v)] = 0;
    for (int c = 0; c < col; ++c) vec(col - c, v - values_[static_cast<std::size_t>(c)]) = 0;
  }

  int n_;
  std::vector<int> values_;
  std::vector<char> used_value_;
  std::vector<char> used_vector_;
  std::vector<Permutation> out_;
};

std::size_t worker_count(int threads) { return static_cast<std::size_t>(std::max(1, threads)); }

} // namespace

std::vector<Permutation> enumerate_costas_arrays(int n, int limit, int threads) {
  if (n < 1) throw std::invalid_argument("enumerate: order must be positive");
  if (n > limit) {
    throw std::length_error("enumerate: order " + std::to_string(n) + " exceeds in-process limit " +
                            std::to_string(limit) + "; supply an array database file instead");
  }
  std::vector<std::vector<Permutation>> by_first(static_cast<std::size_t>(n));
  const auto workers = std::min(worker_count(threads), static_cast<std::size_t>(n));
  auto run = [&](std::size_t w) {
    Backtracker bt(n);
    for (std::size_t first = w; first < static_cast<std::size_t>(n); first += workers)
      by_first[first] = bt.run(static_cast<int>(first + 1));
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<Permutation> out;
  for (auto& part : by_first) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::vector<Permutation> costas_classes(std::span<const Permutation> arrays) {
  std::set<Permutation> reps;
  for (const auto& a : arrays) reps.insert(canonical_array(a));
  return {reps.begin(), reps.end()};
}

std::vector<Permutation> enumerate_costas_classes(int n, int limit, int threads) {
  const auto arrays = enumerate_costas_arrays(n, limit, threads);
  return costas_classes(arrays);
}

ArraySetCheck check_array_set(std::span<const Permutation> arrays, int order) {
  ArraySetCheck check;
  std::set<Permutation> distinct;
  for (std::size_t idx = 0; idx < arrays.size(); ++idx) {
    const auto& a = arrays[idx];
    if (a.order() != order) {
      if (check.uniform_order && check.all_costas) check.first_bad_index = idx;
      check.uniform_order = false;
      continue;
    }
    if (!is_costas(a)) {
      if (check.uniform_order && check.all_costas) check.first_bad_index = idx;
      check.all_costas = false;
      continue;
    }
    if (!distinct.insert(a).second) ++check.duplicates;
  }
  check.distinct = distinct.size();
  std::set<Permutation> reps;
  for (const auto& a : distinct) {
    for (const auto& s : PlanarSymmetry::all()) {
      if (!distinct.contains(apply_planar(s, a))) check.closed_under_d4 = false;
    }
    if (reps.insert(canonical_array(a)).second) check.orbit_total += static_cast<std::size_t>(array_class_size(a));
  }
  check.classes = reps.size();
  return check;
}

std::vector<Permutation> expand_d4(std::span<const Permutation> arrays) {
  std::set<Permutation> out;
  for (const auto& a : arrays)
    for (const auto& s : PlanarSymmetry::all()) out.insert(apply_planar(s, a));
  return {out.begin(), out.end()};
}

std::vector<CostasCube> enumerate_costas_cubes(int n, std::span<const Permutation> arrays, PairJoinMode mode,
                                               int threads) {
  const auto check = check_array_set(arrays, n);
  if (!check.ok()) {
    std::string why;
    if (!check.uniform_order) why = "entry " + std::to_string(check.first_bad_index + 1) + " has the wrong order";
    else if (!check.all_costas) why = "entry " + std::to_string(check.first_bad_index + 1) + " is not Costas";
    else why = "array list is not a union of complete D4 classes";
    throw std::invalid_argument("enumerate_costas_cubes: " + why);
  }
  std::vector<Permutation> all(arrays.begin(), arrays.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::vector<Permutation> outer = mode == PairJoinMode::Literal ? all : costas_classes(all);
  std::vector<std::vector<int>> outer_inverse;
  outer_inverse.reserve(outer.size());
  for (const auto& a : outer) outer_inverse.push_back(a.inverse().values());

  const auto workers = worker_count(threads);
  std::vector<std::set<CostasCube>> partial(workers);
  auto run = [&](std::size_t w) {
    std::vector<int> c(static_cast<std::size_t>(n));
    for (std::size_t ai = w; ai < outer.size(); ai += workers) {
      const auto& a_inv = outer_inverse[ai];
      for (const auto& b : all) {
        const auto& bv = b.values();
        for (std::size_t k = 0; k < bv.size(); ++k) c[k] = a_inv[static_cast<std::size_t>(bv[k] - 1)];
        if (!is_costas_sequence(c)) continue;
        partial[w].insert(canonical_cube(cube_from_projections(outer[ai], b)));
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::set<CostasCube> merged;
  for (auto& part : partial) merged.merge(part);
  return {merged.begin(), merged.end()};
}

std::size_t projection_class_count(std::span<const CostasCube> cubes) {
  std::set<Permutation> classes;
  for (const auto& cube : cubes)
    for (const auto& p : projection_set(cube)) classes.insert(canonical_array(p));
  return classes.size();
}

ClassReport class_report(int n, std::span<const Permutation> arrays, PairJoinMode mode, int threads) {
  ClassReport report;
  report.order = n;
  report.representatives = enumerate_costas_cubes(n, arrays, mode, threads);
  report.cube_classes = report.representatives.size();
  report.projection_array_classes = projection_class_count(report.representatives);
  report.total_array_classes = costas_classes(arrays).size();
  return report;
}

std::vector<ClassReport> table1(int max_n, int limit, int threads) {
  std::vector<ClassReport> rows;
  for (int n = 2; n <= max_n; ++n) {
    const auto arrays = enumerate_costas_arrays(n, limit, threads);
    rows.push_back(class_report(n, arrays, PairJoinMode::Literal, threads));
  }
  return rows;
}

} // namespace costas
