#include "costas/construct.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "costas/symmetry.hpp"

namespace costas {

using gf::Field;
using gf::FieldElement;
using gf::LogTable;

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 9> kFamilyNames{{
    {Family::W1, "w1"},
    {Family::G2, "g2"},
    {Family::W2, "w2"},
    {Family::G3, "g3"},
    {Family::CubeG2x3, "cube-g2x3"},
    {Family::CubeW2W2G2, "cube-w2w2g2"},
    {Family::CubeG3I, "cube-g3-i"},
    {Family::CubeG3II, "cube-g3-ii"},
    {Family::CubeG3, "cube-g3"},
}};

void require_primitive(const Field& f, FieldElement e, const char* name) {
  if (e.value == 0 || !f.is_primitive(e)) {
    throw std::invalid_argument(std::string(name) + " = " + f.format(e) + " is not primitive in GF(" +
                                std::to_string(f.order()) + ")");
  }
}

void require_prime_field(const Field& f, int min_p, const char* what) {
  if (f.degree() != 1) throw std::invalid_argument(std::string(what) + " needs a prime field");
  if (f.characteristic() <= min_p) {
    throw std::invalid_argument(std::string(what) + " needs p > " + std::to_string(min_p));
  }
}

void require_order_above_3(const Field& f, const char* what) {
  if (f.order() <= 3) throw std::invalid_argument(std::string(what) + " needs q > 3");
}

int in_range(int v, int lo, int hi, const char* what) {
  if (v < lo || v > hi) {
    throw std::logic_error(std::string(what) + ": exponent " + std::to_string(v) + " outside " +
                           std::to_string(lo) + ".." + std::to_string(hi));
  }
  return v;
}

void require_g3_admissible(const Field& f, FieldElement phi, bool cube) {
  require_primitive(f, phi, "phi");
  const auto one_minus = f.sub(f.one(), phi);
  if (one_minus.value == 0 || !f.is_primitive(one_minus)) {
    throw std::invalid_argument("1-phi = " + f.format(one_minus) + " is not primitive");
  }
  if (cube) {
    const auto t = f.sub(f.one(), f.inv(phi));
    if (t.value == 0 || !f.is_primitive(t)) {
      throw std::invalid_argument("1-phi^-1 = " + f.format(t) + " is not primitive");
    }
  }
}

// Splits [0, count) across workers; each worker fills its own set, merged at the end.
template <typename Work>
std::map<int, std::set<CostasCube>> parallel_collect(std::size_t count, int threads, Work&& work) {
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  std::vector<std::map<int, std::set<CostasCube>>> partial(workers);
  auto run = [&](std::size_t w) {
    for (std::size_t idx = w; idx < count; idx += workers) work(idx, partial[w]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::map<int, std::set<CostasCube>> out;
  for (auto& part : partial)
    for (auto& [order, cubes] : part) out[order].merge(cubes);
  return out;
}

struct Job {
  int q;
  std::vector<FieldElement> elements;
};

int family_offset(Family f) {
  switch (f) {
  case Family::W1: return 1;
  case Family::G2:
  case Family::W2:
  case Family::CubeG2x3:
  case Family::CubeW2W2G2: return 2;
  default: return 3;
  }
}

} // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "?";
}

Family parse_family(std::string_view name) {
  for (const auto& [fam, n] : kFamilyNames)
    if (n == name) return fam;
  throw std::invalid_argument("unknown construction family '" + std::string(name) + "'");
}

bool is_cube_family(Family f) {
  return f == Family::CubeG2x3 || f == Family::CubeW2W2G2 || f == Family::CubeG3I || f == Family::CubeG3II ||
         f == Family::CubeG3;
}

std::string ConstructionId::describe(const Field& f) const {
  std::ostringstream os;
  os << family_name(family) << " over GF(" << f.order() << ") [" << field << "]";
  static constexpr std::array<const char*, 3> names{"phi", "rho", "psi"};
  auto name_of = [&](std::size_t idx) {
    if (family == Family::CubeW2W2G2 && idx == 1) return "psi";
    return names[std::min<std::size_t>(idx, 2)];
  };
  for (std::size_t idx = 0; idx < elements.size(); ++idx) os << ' ' << name_of(idx) << '=' << f.format(elements[idx]);
  if (family == Family::W1) os << " c=" << shift;
  return os.str();
}

Permutation w1(const Field& field, FieldElement phi, int c) {
  require_prime_field(field, 2, "w1");
  require_primitive(field, phi, "phi");
  const int n = field.order() - 1;
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) s[static_cast<std::size_t>(j - 1)] = static_cast<int>(field.pow(phi, j + c).value);
  return Permutation(std::move(s));
}

Permutation g2(const Field& field, FieldElement phi, FieldElement rho) {
  require_order_above_3(field, "g2");
  require_primitive(field, phi, "phi");
  require_primitive(field, rho, "rho");
  const LogTable log_phi(field, phi);
  const int n = field.order() - 2;
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const auto target = field.sub(field.one(), field.pow(rho, j));
    s[static_cast<std::size_t>(j - 1)] = in_range(log_phi.dlog(target), 1, n, "g2");
  }
  return Permutation(std::move(s));
}

Permutation w2(const Field& field, FieldElement phi) {
  require_prime_field(field, 3, "w2");
  require_primitive(field, phi, "phi");
  const int n = field.order() - 2;
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    s[static_cast<std::size_t>(j - 1)] = in_range(static_cast<int>(field.pow(phi, j).value) - 1, 1, n, "w2");
  }
  return Permutation(std::move(s));
}

Permutation g3(const Field& field, FieldElement phi) {
  require_order_above_3(field, "g3");
  require_g3_admissible(field, phi, false);
  const LogTable log_phi(field, phi);
  const auto one_minus = field.sub(field.one(), phi);
  const int n = field.order() - 3;
  std::vector<int> s(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    const auto target = field.sub(field.one(), field.pow(one_minus, j + 1));
    s[static_cast<std::size_t>(j - 1)] = in_range(log_phi.dlog(target) - 1, 1, n, "g3");
  }
  return Permutation(std::move(s));
}

CostasCube cube_g2x3(const Field& field, FieldElement phi, FieldElement rho, FieldElement psi) {
  require_order_above_3(field, "cube-g2x3");
  require_primitive(field, phi, "phi");
  require_primitive(field, rho, "rho");
  require_primitive(field, psi, "psi");
  const LogTable log_rho(field, rho);
  const LogTable log_psi(field, psi);
  const int q = field.order();
  const int n = q - 2;
  std::vector<CubeRow> rows(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int d = log_rho.dlog(field.sub(field.one(), field.pow(phi, i)));
    const int j = in_range((q - 1 - d) % (q - 1), 1, n, "cube-g2x3 j");
    const int k = in_range(log_psi.dlog(field.sub(field.one(), field.pow(phi, -i))), 1, n, "cube-g2x3 k");
    rows[static_cast<std::size_t>(i - 1)] = CubeRow{j, k};
  }
  return CostasCube(std::move(rows));
}

CostasCube cube_w2w2g2(const Field& field, FieldElement phi, FieldElement psi) {
  require_prime_field(field, 3, "cube-w2w2g2");
  require_primitive(field, phi, "phi");
  require_primitive(field, psi, "psi");
  const LogTable log_phi(field, phi);
  const LogTable log_psi(field, psi);
  const int n = field.order() - 2;
  std::vector<CubeRow> rows(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const auto fi = field.element(static_cast<std::uint32_t>(i));
    const int j = in_range(log_phi.dlog(field.add(fi, field.one())), 1, n, "cube-w2w2g2 j");
    const int k = in_range(log_psi.dlog(field.neg(fi)), 1, n, "cube-w2w2g2 k");
    rows[static_cast<std::size_t>(i - 1)] = CubeRow{j, k};
  }
  return CostasCube(std::move(rows));
}

namespace {

CostasCube cube_g3(const Field& field, FieldElement phi, bool variant_ii) {
  require_order_above_3(field, variant_ii ? "cube-g3-ii" : "cube-g3-i");
  require_g3_admissible(field, phi, true);
  const auto base_j = field.sub(field.one(), phi);
  const auto base_k = field.sub(field.one(), field.inv(phi));
  const LogTable log_j(field, base_j);
  const LogTable log_k(field, base_k);
  const int n = field.order() - 3;
  std::vector<CubeRow> rows(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int j = log_j.dlog(field.sub(field.one(), field.pow(phi, i + 1))) - 1;
    const auto k_target = variant_ii ? field.pow(phi, i) : field.pow(phi, -(i + 1));
    const int k = log_k.dlog(field.sub(field.one(), k_target)) - 1;
    rows[static_cast<std::size_t>(i - 1)] = CubeRow{in_range(j, 1, n, "cube-g3 j"), in_range(k, 1, n, "cube-g3 k")};
  }
  return CostasCube(std::move(rows));
}

} // namespace

CostasCube cube_g3_variant_i(const Field& field, FieldElement phi) { return cube_g3(field, phi, false); }

CostasCube cube_g3_variant_ii(const Field& field, FieldElement phi) { return cube_g3(field, phi, true); }

ReversalResult k_reversal(const CostasCube& cube) {
  const int n = cube.order();
  std::vector<CubeRow> rows(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) rows[static_cast<std::size_t>(i - 1)] = CubeRow{cube.row(i).j, cube.row(n + 1 - i).k};
  auto out = make_unchecked_cube(std::move(rows));
  const bool costas = is_costas_cube(out);
  return ReversalResult{std::move(out), costas};
}

std::map<int, std::set<CostasCube>> sweep(Family family, int max_order, int threads, int max_order_limit) {
  if (!is_cube_family(family)) throw std::invalid_argument("sweep: not a cube family");
  if (max_order > max_order_limit) {
    throw std::length_error("sweep: max order " + std::to_string(max_order) + " exceeds guard " +
                            std::to_string(max_order_limit));
  }
  const int offset = family_offset(family);
  std::map<int, Field> fields;
  std::vector<Job> jobs;
  for (int q : gf::prime_powers(4, max_order + offset)) {
    const bool prime_only = family == Family::CubeW2W2G2;
    if (prime_only && !gf::is_prime(q)) continue;
    const auto& field = fields.emplace(q, Field::standard(q)).first->second;
    switch (family) {
    case Family::CubeG2x3: {
      const auto prim = field.primitive_elements();
      for (auto a : prim)
        for (auto b : prim)
          for (auto c : prim) jobs.push_back(Job{q, {a, b, c}});
      break;
    }
    case Family::CubeW2W2G2: {
      const auto prim = field.primitive_elements();
      for (auto a : prim)
        for (auto b : prim) jobs.push_back(Job{q, {a, b}});
      break;
    }
    default:
      for (auto phi : gf::g3_cube_admissible(field)) jobs.push_back(Job{q, {phi}});
      break;
    }
  }
  return parallel_collect(jobs.size(), threads, [&](std::size_t idx, std::map<int, std::set<CostasCube>>& out) {
    const auto& job = jobs[idx];
    const auto& field = fields.at(job.q);
    const auto& e = job.elements;
    const int order = job.q - offset;
    switch (family) {
    case Family::CubeG2x3: out[order].insert(canonical_cube(cube_g2x3(field, e[0], e[1], e[2]))); break;
    case Family::CubeW2W2G2: out[order].insert(canonical_cube(cube_w2w2g2(field, e[0], e[1]))); break;
    case Family::CubeG3I: out[order].insert(canonical_cube(cube_g3_variant_i(field, e[0]))); break;
    case Family::CubeG3II: out[order].insert(canonical_cube(cube_g3_variant_ii(field, e[0]))); break;
    default:
      out[order].insert(canonical_cube(cube_g3_variant_i(field, e[0])));
      out[order].insert(canonical_cube(cube_g3_variant_ii(field, e[0])));
      break;
    }
  });
}

std::vector<Table2Row> table2(int max_order, int threads) {
  const auto g2x3 = sweep(Family::CubeG2x3, max_order, threads);
  const auto w2w2g2 = sweep(Family::CubeW2W2G2, max_order, threads);
  const auto g3_i = sweep(Family::CubeG3I, max_order, threads);
  const auto g3_ii = sweep(Family::CubeG3II, max_order, threads);
  auto count = [](const auto& m, int order) -> std::size_t {
    const auto it = m.find(order);
    return it == m.end() ? 0 : it->second.size();
  };
  auto get = [](const auto& m, int order) {
    const auto it = m.find(order);
    return it == m.end() ? std::set<CostasCube>{} : it->second;
  };
  std::vector<Table2Row> rows;
  for (int order = 2; order <= max_order; ++order) {
    Table2Row row;
    row.order = order;
    row.g2x3 = count(g2x3, order);
    row.w2w2g2 = count(w2w2g2, order);
    row.g3_i = count(g3_i, order);
    row.g3_ii = count(g3_ii, order);
    auto pooled = get(g3_i, order);
    pooled.merge(get(g3_ii, order));
    row.g3 = pooled.size();
    auto all = get(g2x3, order);
    all.merge(get(w2w2g2, order));
    all.merge(pooled);
    row.constructed = all.size();
    if (row.constructed > 0) rows.push_back(row);
  }
  return rows;
}

std::map<Permutation, std::set<std::string>> catalog(int order) {
  std::map<Permutation, std::set<std::string>> out;
  if (order < 1) return out;
  auto add = [&](const Permutation& p, const char* label) { out[canonical_array(p)].insert(label); };
  const int p1 = order + 1;
  if (p1 > 2 && gf::is_prime(p1)) {
    const auto f = Field::prime(p1);
    for (auto phi : f.primitive_elements())
      for (int c = 0; c < p1 - 1; ++c) add(w1(f, phi, c), "W1");
  }
  const int q2 = order + 2;
  if (q2 > 3 && !gf::prime_powers(q2, q2).empty()) {
    const auto f = Field::standard(q2);
    const auto prim = f.primitive_elements();
    for (auto phi : prim)
      for (auto rho : prim) add(g2(f, phi, rho), "G2");
    if (gf::is_prime(q2))
      for (auto phi : prim) add(w2(f, phi), "W2");
  }
  const int q3 = order + 3;
  if (q3 > 3 && !gf::prime_powers(q3, q3).empty()) {
    const auto f = Field::standard(q3);
    for (auto phi : gf::g3_admissible(f)) add(g3(f, phi), "G3");
  }
  return out;
}

} // namespace costas
