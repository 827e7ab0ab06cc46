#include "costas/symmetry.hpp"

#include <algorithm>
#include <stdexcept>

namespace costas {

namespace {

constexpr std::array<std::array<int, 3>, 6> kAxisPerms{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

int parity(const std::array<int, 3>& p) {
  int inversions = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (p[static_cast<std::size_t>(a)] > p[static_cast<std::size_t>(b)]) ++inversions;
  return inversions % 2;
}

} // namespace

std::array<PlanarSymmetry, 8> PlanarSymmetry::all() {
  std::array<PlanarSymmetry, 8> out{};
  std::size_t idx = 0;
  for (bool t : {false, true})
    for (bool fi : {false, true})
      for (bool fj : {false, true}) out[idx++] = PlanarSymmetry{t, fi, fj};
  return out;
}

PlanarSymmetry compose(const PlanarSymmetry& g, const PlanarSymmetry& h) {
  // Encode each element as a signed 2x2 permutation: output axis a reads input
  // axis src[a], reversed when rev[a].
  auto encode = [](const PlanarSymmetry& s) {
    std::array<int, 2> src = s.transpose ? std::array<int, 2>{1, 0} : std::array<int, 2>{0, 1};
    std::array<bool, 2> rev{s.flip_i, s.flip_j};
    return std::pair{src, rev};
  };
  const auto [gs, gr] = encode(g);
  const auto [hs, hr] = encode(h);
  std::array<int, 2> src{};
  std::array<bool, 2> rev{};
  for (std::size_t a = 0; a < 2; ++a) {
    const auto mid = static_cast<std::size_t>(gs[a]);
    src[a] = hs[mid];
    rev[a] = gr[a] != hr[mid];
  }
  return PlanarSymmetry{src[0] == 1, rev[0], rev[1]};
}

Permutation apply_planar(const PlanarSymmetry& sym, const Permutation& perm) {
  const int n = perm.order();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    int x = perm(j); // i coordinate
    int y = j;
    if (sym.transpose) std::swap(x, y);
    if (sym.flip_i) x = n + 1 - x;
    if (sym.flip_j) y = n + 1 - y;
    out[static_cast<std::size_t>(y - 1)] = x;
  }
  return make_unchecked(std::move(out));
}

std::array<SymmetryElement, 48> SymmetryElement::all() {
  std::array<SymmetryElement, 48> out{};
  std::size_t idx = 0;
  for (const auto& p : kAxisPerms)
    for (int mask = 0; mask < 8; ++mask)
      out[idx++] = SymmetryElement{p, {(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0}};
  return out;
}

std::array<SymmetryElement, 24> SymmetryElement::rotations() {
  std::array<SymmetryElement, 24> out{};
  std::size_t idx = 0;
  for (const auto& s : all())
    if (s.is_rotation()) out[idx++] = s;
  return out;
}

bool SymmetryElement::is_rotation() const {
  const int flips = int{flip[0]} + int{flip[1]} + int{flip[2]};
  return (parity(axis_perm) + flips) % 2 == 0;
}

SymmetryElement compose(const SymmetryElement& g, const SymmetryElement& h) {
  SymmetryElement out;
  for (std::size_t a = 0; a < 3; ++a) {
    const auto mid = static_cast<std::size_t>(g.axis_perm[a]);
    out.axis_perm[a] = h.axis_perm[mid];
    out.flip[a] = g.flip[a] != h.flip[mid];
  }
  return out;
}

SymmetryElement inverse(const SymmetryElement& g) {
  SymmetryElement out;
  for (std::size_t a = 0; a < 3; ++a) {
    const auto src = static_cast<std::size_t>(g.axis_perm[a]);
    out.axis_perm[src] = static_cast<int>(a);
    out.flip[src] = g.flip[a];
  }
  return out;
}

CostasCube apply_cube(const SymmetryElement& sym, const CostasCube& cube) {
  const int n = cube.order();
  std::vector<CubeRow> rows(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const auto& r = cube.row(i);
    const std::array<int, 3> in{i, r.j, r.k};
    std::array<int, 3> out{};
    for (std::size_t a = 0; a < 3; ++a) {
      const int v = in[static_cast<std::size_t>(sym.axis_perm[a])];
      out[a] = sym.flip[a] ? n + 1 - v : v;
    }
    rows[static_cast<std::size_t>(out[0] - 1)] = CubeRow{out[1], out[2]};
  }
  return make_unchecked_cube(std::move(rows));
}

Permutation canonical_array(const Permutation& perm) {
  Permutation best = perm;
  for (const auto& s : PlanarSymmetry::all()) {
    auto img = apply_planar(s, perm);
    if (img < best) best = std::move(img);
  }
  return best;
}

std::vector<Permutation> array_orbit(const Permutation& perm) {
  std::vector<Permutation> out;
  for (const auto& s : PlanarSymmetry::all()) out.push_back(apply_planar(s, perm));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int array_class_size(const Permutation& perm) {
  return static_cast<int>(array_orbit(perm).size());
}

CostasCube canonical_cube(const CostasCube& cube) {
  CostasCube best = cube;
  for (const auto& s : SymmetryElement::all()) {
    auto img = apply_cube(s, cube);
    if (img < best) best = std::move(img);
  }
  return best;
}

std::vector<CostasCube> cube_orbit(const CostasCube& cube) {
  std::vector<CostasCube> out;
  out.reserve(48);
  for (const auto& s : SymmetryElement::all()) out.push_back(apply_cube(s, cube));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::set<Permutation> projection_set(const CostasCube& cube) {
  if (!is_costas_cube(cube)) throw std::invalid_argument("projection_set: not a Costas cube");
  std::set<Permutation> out;
  for (const auto& s : SymmetryElement::all()) out.insert(projections(apply_cube(s, cube)).a);
  return out;
}

std::set<Permutation> projection_set_rotations(const CostasCube& cube) {
  if (!is_costas_cube(cube)) throw std::invalid_argument("projection_set: not a Costas cube");
  std::set<Permutation> out;
  for (const auto& s : SymmetryElement::rotations()) out.insert(projections(apply_cube(s, cube)).a);
  return out;
}

} // namespace costas
