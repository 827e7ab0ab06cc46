#include "costas/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "costas/construct.hpp"
#include "costas/core.hpp"
#include "costas/enumerate.hpp"
#include "costas/gf.hpp"
#include "costas/io.hpp"
#include "costas/symmetry.hpp"

namespace costas::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Machine };

struct Options {
  std::string target;
  std::string path;
  std::string family;
  std::string field;
  std::string phi, rho, psi;
  std::optional<int> shift;
  std::optional<std::uint64_t> seed;
  int order = 0;
  int max_order = 0;
  int min_order = 2;
  int table = 1;
  int threads = 1;
  int limit = kDefaultEnumerationLimit;
  int totals_up_to = 0;
  std::string arrays_file;
  std::string out_path;
  std::string mode = "literal";
  std::string pair;
  bool emit_representatives = false;
  Format format = Format::Text;
};

/// Input rejected for reasons that are not a Costas verification failure.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join_labels(const std::set<std::string>& labels) {
  if (labels.empty()) return "sporadic";
  std::string s;
  for (const auto& l : labels) {
    if (!s.empty()) s += ',';
    s += l;
  }
  return s;
}

class LabelCache {
public:
  std::set<std::string> labels(const Permutation& p) {
    auto it = catalogs_.find(p.order());
    if (it == catalogs_.end()) it = catalogs_.emplace(p.order(), catalog(p.order())).first;
    const auto found = it->second.find(canonical_array(p));
    return found == it->second.end() ? std::set<std::string>{} : found->second;
  }

private:
  std::map<int, std::map<Permutation, std::set<std::string>>> catalogs_;
};

std::vector<int> to_vector(const Permutation& p) { return p.values(); }

json triples_json(const CostasCube& cube) {
  json t = json::array();
  for (const auto& tr : cube.triples()) t.push_back({tr.i, tr.j, tr.k});
  return t;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.target == "array") {
    const auto records = io::read_array_file(o.path, true);
    bool all = true;
    for (const auto& r : records) {
      const auto rep = repeated_difference_vector(r.perm);
      out << "line " << r.line << ": " << r.perm;
      if (rep) {
        all = false;
        out << " not Costas: repeated vector (" << rep->dj << "," << rep->di << ")\n";
      } else {
        out << " Costas\n";
      }
    }
    out << (all ? "all " : "not all ") << records.size() << " arrays are Costas\n";
    return all ? kSuccess : kVerificationFailure;
  }
  if (o.target == "cube") {
    const auto cube = io::read_cube_file(o.path);
    const auto p = projections(cube);
    out << "order " << cube.order() << " permutation cube\n";
    bool all = true;
    for (const auto& [name, perm] : {std::pair{"A", &p.a}, std::pair{"B", &p.b}, std::pair{"C", &p.c}}) {
      const auto rep = repeated_difference_vector(*perm);
      all = all && !rep;
      out << name << ": " << io::format_values(*perm);
      if (rep) out << "  not Costas: repeated vector (" << rep->dj << "," << rep->di << ")\n";
      else out << "  Costas\n";
    }
    out << (all ? "verdict: Costas cube\n" : "verdict: not a Costas cube\n");
    return all ? kSuccess : kVerificationFailure;
  }
  throw UsageError("verify target must be 'array' or 'cube'");
}

// ---------------------------------------------------------------- construct

gf::FieldElement choose(const gf::Field& field, const std::string& given, const std::vector<gf::FieldElement>& candidates,
                        const char* condition, std::mt19937_64* rng) {
  if (!given.empty()) return field.parse_element(given);
  if (candidates.empty()) {
    throw std::invalid_argument(std::string("no admissible element in GF(") + std::to_string(field.order()) +
                                "): need " + condition);
  }
  if (rng) {
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    return candidates[pick(*rng)];
  }
  return candidates.front();
}

int cmd_construct(const Options& o, std::ostream& out) {
  const auto family = parse_family(o.family);
  if (family == Family::CubeG3) throw UsageError("choose cube-g3-i or cube-g3-ii");
  if (o.field.empty()) throw UsageError("construct needs --field");
  const auto field = gf::Field::parse(o.field);
  std::optional<std::mt19937_64> rng;
  if (o.seed) rng.emplace(*o.seed);
  auto* r = rng ? &*rng : nullptr;

  const auto primitive = field.primitive_elements();
  ConstructionId id{family, field.spec(), {}, o.shift.value_or(0)};
  const auto pick_phi = [&]() {
    switch (family) {
    case Family::G3: return choose(field, o.phi, gf::g3_admissible(field), "phi and 1-phi primitive", r);
    case Family::CubeG3I:
    case Family::CubeG3II:
      return choose(field, o.phi, gf::g3_cube_admissible(field), "phi, 1-phi and 1-phi^-1 primitive", r);
    default: return choose(field, o.phi, primitive, "a primitive element", r);
    }
  };
  const auto phi = pick_phi();
  id.elements.push_back(phi);

  std::optional<Permutation> array;
  std::optional<CostasCube> cube;
  switch (family) {
  case Family::W1: array = w1(field, phi, id.shift); break;
  case Family::W2: array = w2(field, phi); break;
  case Family::G3: array = g3(field, phi); break;
  case Family::G2: {
    const auto rho = choose(field, o.rho, primitive, "a primitive element", r);
    id.elements.push_back(rho);
    array = g2(field, phi, rho);
    break;
  }
  case Family::CubeG2x3: {
    const auto rho = choose(field, o.rho, primitive, "a primitive element", r);
    const auto psi = choose(field, o.psi, primitive, "a primitive element", r);
    id.elements.push_back(rho);
    id.elements.push_back(psi);
    cube = cube_g2x3(field, phi, rho, psi);
    break;
  }
  case Family::CubeW2W2G2: {
    const auto psi = choose(field, o.psi, primitive, "a primitive element", r);
    id.elements.push_back(psi);
    cube = cube_w2w2g2(field, phi, psi);
    break;
  }
  case Family::CubeG3I: cube = cube_g3_variant_i(field, phi); break;
  case Family::CubeG3II: cube = cube_g3_variant_ii(field, phi); break;
  case Family::CubeG3: break;
  }
  if (array) {
    const std::vector<std::string> comments{"construction: " + id.describe(field),
                                            std::string("costas: ") + (is_costas(*array) ? "yes" : "no")};
    const std::vector<Permutation> one{*array};
    io::write_array_file(out, one, comments);
    return is_costas(*array) ? kSuccess : kVerificationFailure;
  }
  io::write_cube_json(out, io::CubeDocument{*cube, id.describe(field), true});
  return is_costas_cube(*cube) ? kSuccess : kVerificationFailure;
}

// ---------------------------------------------------------------- enumerate

std::vector<Permutation> load_database(const std::string& path, int order, std::ostream& err) {
  const auto records = io::read_array_file(path);
  if (records.empty()) err << "warning: " << path << " contains no arrays\n";
  for (const auto& rec : records) {
    if (rec.perm.order() != order) {
      throw UsageError("line " + std::to_string(rec.line) + ": order " + std::to_string(rec.perm.order()) +
                       " does not match --order " + std::to_string(order));
    }
    if (!is_costas(rec.perm)) {
      throw std::domain_error("line " + std::to_string(rec.line) + ": " + to_string(rec.perm) + " is not Costas");
    }
  }
  auto arrays = io::permutations_of(records);
  if (!check_array_set(arrays, order).closed_under_d4) {
    err << "warning: " << path << " is not closed under D4; expanding to full orbits\n";
    arrays = expand_d4(arrays);
  }
  return arrays;
}

PairJoinMode parse_mode(const std::string& m) {
  if (m == "literal") return PairJoinMode::Literal;
  if (m == "reduced") return PairJoinMode::ReducedByA;
  throw UsageError("--mode must be 'literal' or 'reduced'");
}

json report_json(const ClassReport& r, bool with_reps) {
  json j{{"order", r.order},
         {"cube_classes", r.cube_classes},
         {"projection_array_classes", r.projection_array_classes},
         {"total_array_classes", r.total_array_classes}};
  if (with_reps) {
    json reps = json::array();
    for (const auto& c : r.representatives) reps.push_back(triples_json(c));
    j["representatives"] = reps;
  }
  return j;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.order < 1) throw UsageError("enumerate needs --order >= 1");
  const auto arrays = o.arrays_file.empty() ? enumerate_costas_arrays(o.order, o.limit, o.threads)
                                            : load_database(o.arrays_file, o.order, err);
  const auto report = class_report(o.order, arrays, parse_mode(o.mode), o.threads);
  if (o.format == Format::Machine) {
    out << report_json(report, o.emit_representatives).dump() << '\n';
    return kSuccess;
  }
  out << "order " << report.order << ": " << report.cube_classes << " cube classes, "
      << report.projection_array_classes << " projection array classes, " << report.total_array_classes
      << " array classes (" << arrays.size() << " arrays)\n";
  if (o.emit_representatives) {
    for (const auto& c : report.representatives) out << "  " << c << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------- tables

std::string dash_if_zero(std::size_t v) { return v == 0 ? "-" : std::to_string(v); }

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

int cmd_tables(const Options& o, std::ostream& out) {
  if (o.max_order < 2) throw UsageError("tables needs --max-order >= 2");
  if (o.table == 1) {
    if (o.format == Format::Machine) out << "order,cube_classes,projection_array_classes,total_array_classes\n";
    else out << "order  cube_classes  projection_classes  array_classes\n";
    for (int n = std::max(2, o.min_order); n <= o.max_order; ++n) {
      const auto arrays = enumerate_costas_arrays(n, o.limit, o.threads);
      const auto r = class_report(n, arrays, PairJoinMode::Literal, o.threads);
      if (o.format == Format::Machine) {
        out << r.order << ',' << r.cube_classes << ',' << r.projection_array_classes << ',' << r.total_array_classes
            << '\n';
      } else {
        out << pad(std::to_string(r.order), 5) << pad(std::to_string(r.cube_classes), 14)
            << pad(std::to_string(r.projection_array_classes), 20) << pad(std::to_string(r.total_array_classes), 15)
            << '\n';
      }
    }
    return kSuccess;
  }
  if (o.table != 2) throw UsageError("--table must be 1 or 2");
  auto rows = table2(o.max_order, o.threads);
  for (auto& row : rows) {
    if (row.order <= o.totals_up_to) {
      const auto arrays = enumerate_costas_arrays(row.order, o.limit, o.threads);
      row.total = enumerate_costas_cubes(row.order, arrays, PairJoinMode::Literal, o.threads).size();
    }
  }
  if (o.format == Format::Machine) out << "order,g2x3,w2w2g2,g3,g3_i,g3_ii,constructed,total\n";
  else out << "order   g2x3  w2w2g2     g3  constructed  total\n";
  for (const auto& r : rows) {
    if (r.order < o.min_order) continue;
    const auto total = r.total ? std::to_string(*r.total) : std::string{};
    if (o.format == Format::Machine) {
      out << r.order << ',' << r.g2x3 << ',' << r.w2w2g2 << ',' << r.g3 << ',' << r.g3_i << ',' << r.g3_ii << ','
          << r.constructed << ',' << total << '\n';
    } else {
      out << pad(std::to_string(r.order), 5) << pad(dash_if_zero(r.g2x3), 7) << pad(dash_if_zero(r.w2w2g2), 8)
          << pad(dash_if_zero(r.g3), 7) << pad(std::to_string(r.constructed), 13)
          << pad(total.empty() ? "?" : total, 7) << '\n';
    }
  }
  return kSuccess;
}

// ---------------------------------------------------------------- sd-set

int cmd_sd_set(const Options& o, std::ostream& out) {
  const auto cube = io::read_cube_file(o.path);
  if (!is_costas_cube(cube)) {
    out << "not a Costas cube\n";
    return kVerificationFailure;
  }
  const auto members = projection_set(cube);
  std::map<Permutation, std::vector<Permutation>> groups;
  for (const auto& p : members) groups[canonical_array(p)].push_back(p);
  const bool degenerate = cube.order() <= 2;
  if (o.format == Format::Machine) {
    json classes = json::array();
    for (const auto& [rep, list] : groups) {
      json m = json::array();
      for (const auto& p : list) m.push_back(to_vector(p));
      classes.push_back({{"canonical", to_vector(rep)}, {"members", m}});
    }
    out << json{{"order", cube.order()}, {"size", members.size()}, {"degenerate", degenerate}, {"classes", classes}}
               .dump()
        << '\n';
    return kSuccess;
  }
  out << "|S(D)| = " << members.size();
  if (degenerate) out << " (degenerate order " << cube.order() << ": D4 classes may be smaller than 4)";
  out << '\n';
  for (const auto& [rep, list] : groups) {
    out << "class " << rep << ":\n";
    for (const auto& p : list) out << "  " << p << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const Options& o, std::ostream& out) {
  LabelCache labels;
  if (o.target == "array") {
    const auto records = io::read_array_file(o.path, true);
    json items = json::array();
    for (const auto& r : records) {
      const auto canon = canonical_array(r.perm);
      const bool costas = is_costas(r.perm);
      const auto lab = costas ? join_labels(labels.labels(r.perm)) : std::string("not Costas");
      if (o.format == Format::Machine) {
        items.push_back({{"line", r.line},
                         {"canonical", to_vector(canon)},
                         {"class_size", array_class_size(r.perm)},
                         {"costas", costas},
                         {"labels", lab}});
      } else {
        out << "line " << r.line << ": canonical " << canon << ", class size " << array_class_size(r.perm) << ", "
            << lab << '\n';
      }
    }
    if (o.format == Format::Machine) out << items.dump() << '\n';
    return kSuccess;
  }
  if (o.target != "cube") throw UsageError("classify target must be 'array' or 'cube'");
  const auto cube = io::read_cube_file(o.path);
  const auto canon = canonical_cube(cube);
  const bool costas = is_costas_cube(cube);
  const auto orbit = cube_orbit(cube).size();
  const auto p = projections(cube);
  std::vector<std::pair<std::string, std::string>> proj_labels;
  for (const auto& [name, perm] : {std::pair{"A", &p.a}, std::pair{"B", &p.b}, std::pair{"C", &p.c}}) {
    proj_labels.emplace_back(name, is_costas(*perm) ? join_labels(labels.labels(*perm)) : "not Costas");
  }
  if (o.format == Format::Machine) {
    json j{{"order", cube.order()}, {"costas", costas}, {"orbit_size", orbit}, {"canonical", triples_json(canon)}};
    if (costas) j["sd_size"] = projection_set(cube).size();
    for (const auto& [name, lab] : proj_labels) j["labels"][name] = lab;
    out << j.dump() << '\n';
    return kSuccess;
  }
  out << "order " << cube.order() << (costas ? " Costas cube" : " permutation cube (not Costas)") << '\n';
  out << "orbit size " << orbit << '\n';
  out << "canonical " << canon << '\n';
  if (costas) out << "|S(D)| = " << projection_set(cube).size() << '\n';
  for (const auto& [name, lab] : proj_labels) out << "projection " << name << ": " << lab << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------- project

int cmd_project(const Options& o, std::ostream& out) {
  if (o.pair.empty()) {
    const auto cube = io::read_cube_file(o.path);
    const auto p = projections(cube);
    out << "A: " << io::format_values(p.a) << '\n';
    out << "B: " << io::format_values(p.b) << '\n';
    out << "C: " << io::format_values(p.c) << '\n';
    return kSuccess;
  }
  ProjectionPair which{};
  if (o.pair == "AB") which = ProjectionPair::AB;
  else if (o.pair == "AC") which = ProjectionPair::AC;
  else if (o.pair == "BC") which = ProjectionPair::BC;
  else throw UsageError("--pair must be AB, AC or BC");
  const auto records = io::read_array_file(o.path);
  if (records.size() != 2) throw UsageError("--pair needs a file with exactly two permutations");
  const auto cube = cube_from_pair(which, records[0].perm, records[1].perm);
  io::write_cube_json(out, io::CubeDocument{cube, std::nullopt, true});
  return kSuccess;
}

// ---------------------------------------------------------------- import

int cmd_import(const Options& o, std::ostream& out, std::ostream& err) {
  const auto records = io::read_array_file(o.path, true);
  if (records.empty()) throw UsageError("no arrays in " + o.path);
  const int order = o.order > 0 ? o.order : records.front().perm.order();
  for (const auto& r : records) {
    if (r.perm.order() != order) {
      err << "rejected: line " << r.line << " has order " << r.perm.order() << ", expected " << order << '\n';
      return kVerificationFailure;
    }
    if (const auto rep = repeated_difference_vector(r.perm)) {
      err << "rejected: line " << r.line << ": " << r.perm << " is not Costas (repeated vector (" << rep->dj << ","
          << rep->di << "))\n";
      return kVerificationFailure;
    }
  }
  auto arrays = io::permutations_of(records);
  auto check = check_array_set(arrays, order);
  if (check.duplicates > 0) err << "warning: dropping " << check.duplicates << " duplicate entries\n";
  bool expanded = false;
  if (!check.closed_under_d4) {
    err << "warning: not closed under D4; expanding " << check.classes << " classes to full orbits\n";
    arrays = expand_d4(arrays);
    check = check_array_set(arrays, order);
    expanded = true;
  } else {
    std::sort(arrays.begin(), arrays.end());
    arrays.erase(std::unique(arrays.begin(), arrays.end()), arrays.end());
  }
  out << "order " << order << ": " << arrays.size() << " arrays, " << check.classes << " classes"
      << (expanded ? " (expanded from representatives)" : " (closed under D4)") << '\n';
  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path);
    if (!file) throw UsageError("cannot write " + o.out_path);
    const std::vector<std::string> comments{"order " + std::to_string(order), std::to_string(arrays.size()) + " arrays, " +
                                                                                std::to_string(check.classes) + " classes"};
    io::write_array_file(file, arrays, comments);
    out << "wrote " << o.out_path << '\n';
  }
  return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Costas arrays and Costas cubes: construct, verify, enumerate, classify"};
  app.require_subcommand(1);
  Options o;
  std::map<std::string, Format> formats{{"text", Format::Text}, {"machine", Format::Machine}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or machine")->transform(CLI::CheckedTransformer(formats));
  };
  auto add_threads = [&](CLI::App* sub) { sub->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber); };

  std::function<int()> action;

  auto* verify = app.add_subcommand("verify", "check Costas property of arrays or a cube");
  verify->add_option("target", o.target, "array | cube")->required();
  verify->add_option("path", o.path, "input file")->required();
  verify->callback([&] { action = [&] { return cmd_verify(o, out); }; });

  auto* construct = app.add_subcommand("construct", "build an array or cube from a finite-field construction");
  construct->add_option("family", o.family, "w1 | g2 | w2 | g3 | cube-g2x3 | cube-w2w2g2 | cube-g3-i | cube-g3-ii")
      ->required();
  construct->add_option("--field", o.field, "field spec, e.g. 13 or 2^4:1,0,0,1,1");
  construct->add_option("--phi", o.phi, "element as integer encoding or polynomial");
  construct->add_option("--rho", o.rho);
  construct->add_option("--psi", o.psi);
  construct->add_option("--c", o.shift, "W1 column shift");
  construct->add_option("--seed", o.seed, "pick unspecified elements at random with this seed");
  construct->callback([&] { action = [&] { return cmd_construct(o, out); }; });

  auto* enumerate = app.add_subcommand("enumerate", "census of Costas cube classes for one order");
  enumerate->add_option("--order", o.order)->required();
  enumerate->add_option("--arrays-file", o.arrays_file, "complete list of Costas arrays of this order");
  enumerate->add_flag("--emit-representatives", o.emit_representatives);
  enumerate->add_option("--limit", o.limit, "largest order enumerated in-process");
  enumerate->add_option("--mode", o.mode, "literal | reduced");
  add_threads(enumerate);
  add_format(enumerate);
  enumerate->callback([&] { action = [&] { return cmd_enumerate(o, out, err); }; });

  auto* tables = app.add_subcommand("tables", "class-count tables");
  tables->add_option("--table", o.table, "1 (census) or 2 (constructions)");
  tables->add_option("--max-order", o.max_order)->required();
  tables->add_option("--min-order", o.min_order);
  tables->add_option("--limit", o.limit, "largest order enumerated in-process");
  tables->add_option("--totals-up-to", o.totals_up_to, "table 2: fill the total column by enumeration up to this order");
  add_threads(tables);
  add_format(tables);
  tables->callback([&] { action = [&] { return cmd_tables(o, out); }; });

  auto* sd = app.add_subcommand("sd-set", "distinct projections over the symmetry orbit of a Costas cube");
  sd->add_option("path", o.path)->required();
  add_format(sd);
  sd->callback([&] { action = [&] { return cmd_sd_set(o, out); }; });

  auto* classify = app.add_subcommand("classify", "canonical form and construction labels");
  classify->add_option("target", o.target, "array | cube")->required();
  classify->add_option("path", o.path)->required();
  add_format(classify);
  classify->callback([&] { action = [&] { return cmd_classify(o, out); }; });

  auto* project = app.add_subcommand("project", "projections of a cube, or a cube from two projections");
  project->add_option("path", o.path)->required();
  project->add_option("--pair", o.pair, "AB | AC | BC: build the cube from the two permutations in path");
  project->callback([&] { action = [&] { return cmd_project(o, out); }; });

  auto* import = app.add_subcommand("import", "validate and normalize an array database file");
  import->add_option("path", o.path)->required();
  import->add_option("--expect-order,--order", o.order);
  import->add_option("--out", o.out_path, "write the normalized list here");
  import->callback([&] { action = [&] { return cmd_import(o, out, err); }; });

  std::vector<std::string> argv_storage{"costas"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    return action();
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

} // namespace costas::cli
