#include "costas/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace costas::io {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return in;
}

bool skip_line(const std::string& line) {
  for (char ch : line) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '#';
  }
  return true;
}

std::vector<int> parse_ints(const std::string& line, int line_no) {
  std::string cleaned = line;
  for (auto& ch : cleaned)
    if (ch == ',') ch = ' ';
  std::istringstream is(cleaned);
  std::vector<int> values;
  std::string tok;
  while (is >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError(line_no, "not an integer: '" + tok + "'");
    values.push_back(v);
  }
  return values;
}

std::string json_list(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    if (idx) s += ", ";
    s += std::to_string(v[idx]);
  }
  return s + "]";
}

} // namespace

std::vector<ArrayRecord> read_array_file(std::istream& in, bool allow_mixed) {
  std::vector<ArrayRecord> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    auto values = parse_ints(line, line_no);
    try {
      out.push_back(ArrayRecord{line_no, Permutation(std::move(values))});
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    if (!allow_mixed && out.back().perm.order() != out.front().perm.order()) {
      throw ParseError(line_no, "order " + std::to_string(out.back().perm.order()) + " differs from order " +
                                    std::to_string(out.front().perm.order()) + " of the first entry");
    }
  }
  return out;
}

std::vector<ArrayRecord> read_array_file(const std::string& path, bool allow_mixed) {
  auto in = open_input(path);
  return read_array_file(in, allow_mixed);
}

std::vector<Permutation> permutations_of(std::span<const ArrayRecord> records) {
  std::vector<Permutation> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.perm);
  return out;
}

void write_array_file(std::ostream& out, std::span<const Permutation> arrays, std::span<const std::string> comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  for (const auto& a : arrays) out << format_values(a) << '\n';
}

CostasCube read_cube_file(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError(0, "empty cube file");

  std::vector<Triple> triples;
  if (text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(0, std::string("malformed cube document: ") + e.what());
    }
    if (!doc.contains("triples") || !doc["triples"].is_array()) throw ParseError(0, "cube document lacks 'triples'");
    for (const auto& t : doc["triples"]) {
      if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() ||
          !t[2].is_number_integer()) {
        throw ParseError(0, "each triple must be [i, j, k] integers");
      }
      triples.push_back(Triple{t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }
    if (doc.contains("order")) {
      if (!doc["order"].is_number_integer()) throw ParseError(0, "'order' must be an integer");
      const int order = doc["order"].get<int>();
      if (order != static_cast<int>(triples.size())) {
        throw ParseError(0, "order " + std::to_string(order) + " but " + std::to_string(triples.size()) + " triples");
      }
    }
  } else {
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
      ++line_no;
      if (skip_line(line)) continue;
      const auto v = parse_ints(line, line_no);
      if (v.size() != 3) throw ParseError(line_no, "expected 'i j k'");
      triples.push_back(Triple{v[0], v[1], v[2]});
    }
  }
  try {
    return CostasCube::from_triples(std::move(triples));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

CostasCube read_cube_file(const std::string& path) {
  auto in = open_input(path);
  return read_cube_file(in);
}

void write_cube_json(std::ostream& out, const CubeDocument& doc) {
  const auto& cube = doc.cube;
  out << "{\n  \"order\": " << cube.order() << ",\n";
  if (doc.construction) out << "  \"construction\": " << nlohmann::json(*doc.construction).dump() << ",\n";
  out << "  \"costas\": " << (is_costas_cube(cube) ? "true" : "false") << ",\n";
  out << "  \"triples\": [\n";
  for (const auto& t : cube.triples()) {
    out << "    [" << t.i << ", " << t.j << ", " << t.k << "]" << (t.i < cube.order() ? "," : "") << '\n';
  }
  out << "  ]";
  if (doc.with_projections) {
    const auto p = projections(cube);
    out << ",\n  \"projections\": {\n";
    out << "    \"A\": " << json_list(p.a.values()) << ",\n";
    out << "    \"B\": " << json_list(p.b.values()) << ",\n";
    out << "    \"C\": " << json_list(p.c.values()) << "\n  }";
  }
  out << "\n}\n";
}

void write_cube_text(std::ostream& out, const CostasCube& cube) {
  for (const auto& t : cube.triples()) out << t.i << ' ' << t.j << ' ' << t.k << '\n';
}

std::string format_values(const Permutation& perm) {
  std::string s;
  for (std::size_t idx = 0; idx < perm.values().size(); ++idx) {
    if (idx) s += ' ';
    s += std::to_string(perm.values()[idx]);
  }
  return s;
}

} // namespace costas::io
