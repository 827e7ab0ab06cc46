#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "costas/cli.hpp"
#include "costas/enumerate.hpp"
#include "costas/io.hpp"
#include "fixtures.hpp"

namespace fs = std::filesystem;
using costas::CostasCube;
using costas::Permutation;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = costas::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("costas-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::string cube_json(const CostasCube& cube) {
  std::ostringstream s;
  costas::io::write_cube_json(s, costas::io::CubeDocument{cube, std::nullopt, true});
  return s.str();
}

} // namespace

TEST_CASE("array file round trip") {
  const auto arrays = costas::enumerate_costas_arrays(5);
  std::ostringstream out;
  const std::vector<std::string> comments{"order 5"};
  costas::io::write_array_file(out, arrays, comments);
  std::istringstream in(out.str());
  const auto records = costas::io::read_array_file(in);
  CHECK(costas::io::permutations_of(records) == arrays);
  CHECK(records.front().line == 2);
}

TEST_CASE("array file parsing") {
  std::istringstream ok("# header\n\n3 5 4 2 6 1\n2,4,5,1,6,3\n");
  const auto r = costas::io::read_array_file(ok);
  REQUIRE(r.size() == 2);
  CHECK(r[1].perm == Permutation({2, 4, 5, 1, 6, 3}));
  CHECK(r[1].line == 4);

  std::istringstream dup("1 2 3\n1 1 2\n");
  try {
    costas::io::read_array_file(dup);
    FAIL("expected ParseError");
  } catch (const costas::io::ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream mixed("1 2 3\n2 1\n");
  CHECK_THROWS_AS(costas::io::read_array_file(mixed), costas::io::ParseError);
  std::istringstream mixed_ok("1 2 3\n2 1\n");
  CHECK(costas::io::read_array_file(mixed_ok, true).size() == 2);
  std::istringstream junk("1 x 3\n");
  CHECK_THROWS_AS(costas::io::read_array_file(junk), costas::io::ParseError);
}

TEST_CASE("cube file round trip, both forms") {
  const auto cube = fixtures::kGf16.cube();
  std::istringstream json_in(cube_json(cube));
  CHECK(costas::io::read_cube_file(json_in) == cube);
  std::ostringstream text;
  costas::io::write_cube_text(text, cube);
  std::istringstream text_in(text.str());
  CHECK(costas::io::read_cube_file(text_in) == cube);
  // The JSON document carries projections and parses as JSON.
  const auto doc = nlohmann::json::parse(cube_json(cube));
  CHECK(doc["order"] == 14);
  CHECK(doc["projections"]["C"].get<std::vector<int>>() == fixtures::kGf16.c);

  std::istringstream bad("{\"order\": 2, \"triples\": [[1,1,1],[2,1,2]]}");
  CHECK_THROWS_AS(costas::io::read_cube_file(bad), costas::io::ParseError);
  std::istringstream truncated("{\"order\": 2, \"triples\": [[1,1,1]");
  CHECK_THROWS_AS(costas::io::read_cube_file(truncated), costas::io::ParseError);
}

TEST_CASE("cli usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "array", "/nonexistent/file"}).code == 2);
  CHECK(run({"verify", "sphere", "/nonexistent/file"}).code == 2);
  CHECK(run({"tables", "--table", "3", "--max-order", "5"}).code == 2);
  CHECK(run({"construct", "w1"}).code == 2);
  CHECK(run({"construct", "lempel", "--field", "13"}).code == 2);
  CHECK(run({"enumerate", "--order", "6", "--format", "xml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli verify") {
  TempDir dir;
  const auto good = dir.write("good.txt", "3 5 4 2 6 1\n2 4 5 1 6 3\n");
  auto r = run({"verify", "array", good});
  CHECK(r.code == 0);
  CHECK(r.out.find("all 2 arrays are Costas") != std::string::npos);

  const auto bad = dir.write("bad.txt", "2 1\n1 2 3 4\n");
  r = run({"verify", "array", bad});
  CHECK(r.code == 1);
  CHECK(r.out.find("line 2") != std::string::npos);
  CHECK(r.out.find("repeated vector (1,1)") != std::string::npos);

  const auto cube = dir.write("cube.json", cube_json(fixtures::kOrder6.cube()));
  r = run({"verify", "cube", cube});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: Costas cube") != std::string::npos);

  const auto diag = dir.write("diag.txt", "1 1 1\n2 2 2\n3 3 3\n4 4 4\n");
  r = run({"verify", "cube", diag});
  CHECK(r.code == 1);
  CHECK(r.out.find("not a Costas cube") != std::string::npos);

  const auto broken = dir.write("broken.txt", "1 1 1\n2 1 2\n");
  CHECK(run({"verify", "cube", broken}).code == 2);
}

TEST_CASE("cli construct") {
  auto r = run({"construct", "g2", "--field", "13", "--phi", "11", "--rho", "6"});
  CHECK(r.code == 0);
  std::istringstream arr(r.out);
  const auto records = costas::io::read_array_file(arr);
  REQUIRE(records.size() == 1);
  CHECK(records[0].perm.values() == fixtures::kP13.c);
  CHECK(r.out.find("# costas: yes") != std::string::npos);

  r = run({"construct", "cube-g2x3", "--field", "2^4:1,0,0,1,1", "--phi", "x", "--rho", "1+x^2+x^3", "--psi",
           "x+x^2+x^3"});
  CHECK(r.code == 0);
  std::istringstream cube_in(r.out);
  CHECK(costas::io::read_cube_file(cube_in) == fixtures::kGf16.cube());
  CHECK(nlohmann::json::parse(r.out)["costas"] == true);

  r = run({"construct", "cube-g3-ii", "--field", "3^3", "--phi", "2+2x"});
  CHECK(r.code == 0);
  std::istringstream e_in(r.out);
  CHECK(costas::io::read_cube_file(e_in) == fixtures::kGf27E.cube());

  // Defaults pick the first admissible element; seeds are reproducible.
  CHECK(run({"construct", "w2", "--field", "13"}).code == 0);
  const auto s1 = run({"construct", "cube-g2x3", "--field", "27", "--seed", "7"});
  const auto s2 = run({"construct", "cube-g2x3", "--field", "3^3", "--seed", "7"});
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);

  r = run({"construct", "cube-g3-i", "--field", "2^4"});
  CHECK(r.code == 2);
  CHECK(r.err.find("no admissible element") != std::string::npos);
  r = run({"construct", "g2", "--field", "13", "--phi", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("not primitive") != std::string::npos);
  r = run({"construct", "g3", "--field", "27", "--phi", "2"});
  CHECK(r.code == 2);
}

TEST_CASE("cli enumerate and tables") {
  auto r = run({"enumerate", "--order", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("47 cube classes, 17 projection array classes, 17 array classes") != std::string::npos);
  r = run({"enumerate", "--order", "5", "--format", "machine", "--emit-representatives", "--mode", "reduced"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["cube_classes"] == 13);
  CHECK(j["representatives"].size() == 13);
  CHECK(run({"enumerate", "--order", "14"}).code == 2);
  CHECK(run({"enumerate", "--order", "6", "--mode", "fast"}).code == 2);

  r = run({"tables", "--table", "1", "--max-order", "6", "--format", "machine"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "order,cube_classes,projection_array_classes,total_array_classes\n2,1,1,1\n3,1,1,1\n4,2,1,2\n5,13,6,6\n6,47,17,17\n");
  r = run({"tables", "--table", "2", "--max-order", "7", "--totals-up-to", "7", "--format", "machine"});
  CHECK(r.code == 0);
  CHECK(r.out.find("6,4,0,0,0,0,4,47\n") != std::string::npos);
  CHECK(r.out.find("5,1,1,2,1,1,4,13\n") != std::string::npos);
}

TEST_CASE("cli enumerate from a database file") {
  TempDir dir;
  const auto arrays = costas::enumerate_costas_arrays(7);
  std::ostringstream all;
  costas::io::write_array_file(all, arrays);
  const auto full = dir.write("full.txt", all.str());
  auto r = run({"enumerate", "--order", "7", "--arrays-file", full});
  CHECK(r.code == 0);
  CHECK(r.out.find("order 7: 30 cube classes, 26 projection array classes, 30 array classes") != std::string::npos);
  CHECK(r.err.empty());

  std::ostringstream reps;
  costas::io::write_array_file(reps, costas::costas_classes(arrays));
  const auto partial = dir.write("reps.txt", reps.str());
  r = run({"enumerate", "--order", "7", "--arrays-file", partial});
  CHECK(r.code == 0);
  CHECK(r.err.find("expanding") != std::string::npos);
  CHECK(r.out.find("30 cube classes") != std::string::npos);

  const auto empty = dir.write("empty.txt", "# nothing here\n");
  r = run({"enumerate", "--order", "9", "--arrays-file", empty});
  CHECK(r.code == 0);
  CHECK(r.out.find("order 9: 0 cube classes, 0 projection array classes, 0 array classes") != std::string::npos);

  const auto wrong = dir.write("wrong.txt", "1 2 3 4 5 6 7\n");
  CHECK(run({"enumerate", "--order", "7", "--arrays-file", wrong}).code == 1);
  CHECK(run({"enumerate", "--order", "8", "--arrays-file", full}).code == 2);
}

TEST_CASE("cli sd-set, classify, project") {
  TempDir dir;
  std::vector<costas::CubeRow> rows;
  for (std::size_t idx = 0; idx < fixtures::kSd4J.size(); ++idx) rows.push_back({fixtures::kSd4J[idx], fixtures::kSd4K[idx]});
  const auto sd4 = dir.write("sd4.json", cube_json(CostasCube(rows)));
  auto r = run({"sd-set", sd4, "--format", "machine"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["size"] == 4);
  CHECK(j["degenerate"] == false);
  std::set<std::vector<int>> members;
  for (const auto& c : j["classes"])
    for (const auto& m : c["members"]) members.insert(m.get<std::vector<int>>());
  CHECK(members == std::set<std::vector<int>>(fixtures::kSd4Members.begin(), fixtures::kSd4Members.end()));
  r = run({"sd-set", sd4});
  CHECK(r.out.rfind("|S(D)| = 4\n", 0) == 0);

  const auto two = dir.write("two.txt", "1 1 1\n2 2 2\n");
  r = run({"sd-set", two});
  CHECK(r.code == 0);
  CHECK(r.out.find("degenerate") != std::string::npos);

  const auto p13 = dir.write("p13.json", cube_json(fixtures::kP13.cube()));
  r = run({"classify", "cube", p13, "--format", "machine"});
  CHECK(r.code == 0);
  const auto c = nlohmann::json::parse(r.out);
  CHECK(c["costas"] == true);
  CHECK(c["labels"]["A"].get<std::string>().find("W2") != std::string::npos);
  CHECK(c["labels"]["C"].get<std::string>().find("G2") != std::string::npos);

  const auto arr = dir.write("arr.txt", "3 5 4 2 6 1\n1 2 3\n");
  r = run({"classify", "array", arr});
  CHECK(r.code == 0);
  CHECK(r.out.find("line 1: canonical") != std::string::npos);
  CHECK(r.out.find("not Costas") != std::string::npos);

  r = run({"project", p13});
  CHECK(r.code == 0);
  CHECK(r.out == "A: 10 3 4 2 6 11 1 8 7 9 5\nB: 7 3 5 4 11 1 6 10 8 9 2\nC: 9 2 11 3 6 7 5 1 8 10 4\n");
  const auto pair = dir.write("pair.txt", "10 3 4 2 6 11 1 8 7 9 5\n9 2 11 3 6 7 5 1 8 10 4\n");
  r = run({"project", pair, "--pair", "AC"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  CHECK(costas::io::read_cube_file(in) == fixtures::kP13.cube());
  CHECK(run({"project", pair, "--pair", "XY"}).code == 2);
}

TEST_CASE("cli import") {
  TempDir dir;
  std::ostringstream reps;
  costas::io::write_array_file(reps, costas::enumerate_costas_classes(6));
  const auto path = dir.write("reps.txt", reps.str());
  const auto out_path = dir.file("full.txt");
  auto r = run({"import", path, "--expect-order", "6", "--out", out_path});
  CHECK(r.code == 0);
  CHECK(r.out.find("order 6: 116 arrays, 17 classes (expanded from representatives)") != std::string::npos);
  CHECK(r.err.find("warning") != std::string::npos);
  CHECK(costas::io::permutations_of(costas::io::read_array_file(out_path)) == costas::enumerate_costas_arrays(6));

  const auto bad = dir.write("bad.txt", "2 4 5 1 6 3\n1 2 3 4 5 6\n");
  r = run({"import", bad});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 2") != std::string::npos);
  const auto mixed = dir.write("mixed.txt", "2 4 5 1 6 3\n2 1\n");
  r = run({"import", mixed, "--order", "6"});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 2 has order 2") != std::string::npos);
}
