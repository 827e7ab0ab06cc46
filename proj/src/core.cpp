#include "costas/core.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace costas {

namespace {

void require_bijection(const std::vector<int>& values, const char* what) {
  const auto n = values.size();
  std::vector<char> seen(n + 1, 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    const int v = values[idx];
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw std::invalid_argument(std::string(what) + ": value " + std::to_string(v) +
                                  " at position " + std::to_string(idx + 1) + " is outside 1.." +
                                  std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument(std::string(what) + ": value " + std::to_string(v) +
                                  " repeats (not a bijection)");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

// Scans difference vectors for each column gap dj. For a fixed dj the vectors
// are distinct iff the row differences are distinct.
template <typename OnRepeat>
bool scan_difference_vectors(std::span<const int> s, OnRepeat&& on_repeat) {
  const int n = static_cast<int>(s.size());
  if (n <= 32) {
    for (int dj = 1; dj < n; ++dj) {
      std::uint64_t mask = 0;
      for (int j = 0; j + dj < n; ++j) {
        const int di = s[static_cast<std::size_t>(j + dj)] - s[static_cast<std::size_t>(j)];
        const std::uint64_t bit = std::uint64_t{1} << (di + n);
        if (mask & bit) {
          on_repeat(DifferenceVector{dj, di});
          return false;
        }
        mask |= bit;
      }
    }
    return true;
  }
  std::vector<char> seen(static_cast<std::size_t>(2 * n + 1));
  for (int dj = 1; dj < n; ++dj) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j + dj < n; ++j) {
      const int di = s[static_cast<std::size_t>(j + dj)] - s[static_cast<std::size_t>(j)];
      auto& slot = seen[static_cast<std::size_t>(di + n)];
      if (slot) {
        on_repeat(DifferenceVector{dj, di});
        return false;
      }
      slot = 1;
    }
  }
  return true;
}

} // namespace

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("permutation: order must be positive");
  require_bijection(values_, "permutation");
}

Permutation Permutation::identity(int order) {
  if (order < 1) throw std::invalid_argument("permutation: order must be positive");
  std::vector<int> v(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(v), Unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (std::size_t j = 0; j < values_.size(); ++j) {
    inv[static_cast<std::size_t>(values_[j] - 1)] = static_cast<int>(j + 1);
  }
  return Permutation(std::move(inv), Unchecked{});
}

Permutation make_unchecked(std::vector<int> values) {
  return Permutation(std::move(values), Permutation::Unchecked{});
}

std::string to_string(const Permutation& perm) {
  std::ostringstream os;
  os << perm;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& perm) {
  os << '(';
  for (std::size_t idx = 0; idx < perm.values().size(); ++idx) {
    if (idx) os << ',';
    os << perm.values()[idx];
  }
  return os << ')';
}

CostasCube::CostasCube(std::vector<CubeRow> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("cube: order must be positive");
  std::vector<int> js, ks;
  js.reserve(rows_.size());
  ks.reserve(rows_.size());
  for (const auto& r : rows_) {
    js.push_back(r.j);
    ks.push_back(r.k);
  }
  require_bijection(js, "cube j coordinates");
  require_bijection(ks, "cube k coordinates");
}

CostasCube CostasCube::from_triples(std::vector<Triple> triples) {
  if (triples.empty()) throw std::invalid_argument("cube: no triples");
  const auto n = triples.size();
  std::vector<CubeRow> rows(n);
  std::vector<char> seen(n + 1, 0);
  for (const auto& t : triples) {
    if (t.i < 1 || static_cast<std::size_t>(t.i) > n) {
      throw std::invalid_argument("cube: i = " + std::to_string(t.i) + " outside 1.." +
                                  std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(t.i)]) {
      throw std::invalid_argument("cube: duplicate triple for i = " + std::to_string(t.i));
    }
    seen[static_cast<std::size_t>(t.i)] = 1;
    rows[static_cast<std::size_t>(t.i - 1)] = CubeRow{t.j, t.k};
  }
  return CostasCube(std::move(rows));
}

CostasCube CostasCube::diagonal(int order) {
  if (order < 1) throw std::invalid_argument("cube: order must be positive");
  std::vector<CubeRow> rows(static_cast<std::size_t>(order));
  for (int i = 1; i <= order; ++i) rows[static_cast<std::size_t>(i - 1)] = CubeRow{i, i};
  return CostasCube(std::move(rows), Unchecked{});
}

std::vector<Triple> CostasCube::triples() const {
  std::vector<Triple> out;
  out.reserve(rows_.size());
  for (std::size_t idx = 0; idx < rows_.size(); ++idx) {
    out.push_back(Triple{static_cast<int>(idx + 1), rows_[idx].j, rows_[idx].k});
  }
  return out;
}

CostasCube make_unchecked_cube(std::vector<CubeRow> rows) {
  return CostasCube(std::move(rows), CostasCube::Unchecked{});
}

std::ostream& operator<<(std::ostream& os, const CostasCube& cube) {
  os << '{';
  for (const auto& t : cube.triples()) {
    if (t.i > 1) os << ',';
    os << '(' << t.i << ',' << t.j << ',' << t.k << ')';
  }
  return os << '}';
}

int max_offphase_autocorrelation(const Permutation& perm) {
  // Shifts (u, v) and (-u, -v) give equal counts; shifts with u = 0 give 0.
  // So the maximum is the largest multiplicity of a difference vector with dj > 0.
  const int n = perm.order();
  const auto& s = perm.values();
  int best = 0;
  std::vector<int> count(static_cast<std::size_t>(2 * n + 1));
  for (int dj = 1; dj < n; ++dj) {
    std::fill(count.begin(), count.end(), 0);
    for (int j = 0; j + dj < n; ++j) {
      const int di = s[static_cast<std::size_t>(j + dj)] - s[static_cast<std::size_t>(j)];
      best = std::max(best, ++count[static_cast<std::size_t>(di + n)]);
    }
  }
  return best;
}

bool is_costas(const Permutation& perm) {
  return scan_difference_vectors(perm.values(), [](DifferenceVector) {});
}

bool is_costas_sequence(std::span<const int> values) {
  return scan_difference_vectors(values, [](DifferenceVector) {});
}

std::optional<DifferenceVector> repeated_difference_vector(const Permutation& perm) {
  std::optional<DifferenceVector> found;
  scan_difference_vectors(perm.values(), [&](DifferenceVector v) { found = v; });
  return found;
}

ProjectionTriple projections(const CostasCube& cube) {
  const auto n = static_cast<std::size_t>(cube.order());
  std::vector<int> a(n), b(n), c(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    const auto& r = cube.rows()[idx];
    const int i = static_cast<int>(idx + 1);
    a[static_cast<std::size_t>(r.j - 1)] = i;
    b[static_cast<std::size_t>(r.k - 1)] = i;
    c[static_cast<std::size_t>(r.k - 1)] = r.j;
  }
  return ProjectionTriple{make_unchecked(std::move(a)), make_unchecked(std::move(b)),
                          make_unchecked(std::move(c))};
}

CostasCube cube_from_projections(const Permutation& a, const Permutation& b) {
  return cube_from_pair(ProjectionPair::AB, a, b);
}

CostasCube cube_from_pair(ProjectionPair which, const Permutation& x, const Permutation& y) {
  if (x.order() != y.order()) {
    throw std::invalid_argument("cube_from_pair: order mismatch (" + std::to_string(x.order()) +
                                " vs " + std::to_string(y.order()) + ")");
  }
  const int n = x.order();
  std::vector<CubeRow> rows(static_cast<std::size_t>(n));
  switch (which) {
  case ProjectionPair::AB: {
    // j_i = a^{-1}(i), k_i = b^{-1}(i)
    for (int j = 1; j <= n; ++j) rows[static_cast<std::size_t>(x(j) - 1)].j = j;
    for (int k = 1; k <= n; ++k) rows[static_cast<std::size_t>(y(k) - 1)].k = k;
    break;
  }
  case ProjectionPair::AC: {
    // j_i = a^{-1}(i), k_i = c^{-1}(j_i)
    const auto c_inv = y.inverse();
    for (int j = 1; j <= n; ++j) rows[static_cast<std::size_t>(x(j) - 1)] = CubeRow{j, c_inv(j)};
    break;
  }
  case ProjectionPair::BC: {
    // k_i = b^{-1}(i), j_i = c(k_i)
    for (int k = 1; k <= n; ++k) rows[static_cast<std::size_t>(x(k) - 1)] = CubeRow{y(k), k};
    break;
  }
  }
  return make_unchecked_cube(std::move(rows));
}

bool is_costas_cube(const CostasCube& cube) {
  const auto p = projections(cube);
  return is_costas(p.a) && is_costas(p.b) && is_costas(p.c);
}

} // namespace costas

std::size_t std::hash<costas::Permutation>::operator()(const costas::Permutation& p) const noexcept {
  std::size_t h = 0;
  for (int v : p.values()) h = costas::hash_combine(h, static_cast<std::size_t>(v));
  return h;
}

std::size_t std::hash<costas::CostasCube>::operator()(const costas::CostasCube& c) const noexcept {
  std::size_t h = 0;
  for (const auto& r : c.rows()) {
    h = costas::hash_combine(h, static_cast<std::size_t>(r.j) * 131u + static_cast<std::size_t>(r.k));
  }
  return h;
}
