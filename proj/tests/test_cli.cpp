#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "backstrom/cli.hpp"
#include "support.hpp"

using testing_support::fixture;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = backstrom::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

struct Dot {
  std::set<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> edge_labels;
};

// accepts only the statement forms the tool emits
Dot parse_dot(const std::string& text) {
  const auto ls = lines(text);
  REQUIRE(ls.size() >= 2);
  CHECK(std::regex_match(ls.front(), std::regex(R"(digraph \w+ \{)")));
  CHECK(ls.back() == "}");
  const std::regex node(R"re(\s*"?(\w+)"?( \[.*\])?;)re");
  const std::regex edge(R"re(\s*"?(\w+)"? -> "?(\w+)"?( \[label="([^"]*)"\])?;)re");
  Dot d;
  for (std::size_t i = 1; i + 1 < ls.size(); ++i) {
    std::smatch m;
    if (std::regex_match(ls[i], m, edge)) {
      d.edges.push_back({m[1], m[2]});
      if (m[4].matched) d.edge_labels.push_back(m[4]);
    } else if (std::regex_match(ls[i], m, node)) {
      d.nodes.insert(m[1]);
    } else if (ls[i].find('=') == std::string::npos) {
      FAIL("unexpected DOT line: " << ls[i]);
    }
  }
  return d;
}

fs::path scratch_dir(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("backstrom_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("classify the glued two-cycle") {
  const auto r = run({"classify", fixture("glued_two_cycle.json").string()});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["gorenstein"] == true);
  CHECK(j["finite_gldim"] == false);
  CHECK(j["indecomposable_cm_count"] == 3);
  CHECK(j["witnesses"].contains("finite_gldim"));
}

TEST_CASE("validate reports overlapping parts") {
  const auto r = run({"validate", fixture("overlapping_parts.json").string()});
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["valid"] == false);
  bool repeated = false;
  for (const auto& v : j["violations"]) repeated = repeated || v["kind"] == "node_repeated";
  CHECK(repeated);
  CHECK(run({"validate", fixture("glued_two_cycle.json").string()}).code == 0);
  CHECK(run({"classify", fixture("overlapping_parts.json").string()}).code == 1);
}

TEST_CASE("A-quiver of three glued local blocks is the complete digraph") {
  const auto r = run({"a-quiver", fixture("local_product_n3.json").string(), "--dot"});
  REQUIRE(r.code == 0);
  const auto d = parse_dot(r.out);
  CHECK(d.nodes.size() == 3);
  CHECK(d.edges.size() == 6);
  for (const auto& [s, t] : d.edges) CHECK(s != t);
  CHECK(d.edge_labels.empty());
}

TEST_CASE("valued arrows are labelled") {
  const auto r = run({"a-quiver", fixture("field_extension_loop_n3.json").string()});
  REQUIRE(r.code == 0);
  const auto d = parse_dot(r.out);
  CHECK(d.edge_labels == std::vector<std::string>{"(2,2)"});
  CHECK(r.out.find("d=3") != std::string::npos);
  CHECK(run({"h-quiver", fixture("field_extension_loop_n3.json").string()}).code == 1);
}

TEST_CASE("H-quiver as DOT") {
  const auto r = run({"h-quiver", fixture("glued_two_cycle.json").string(), "--dot"});
  REQUIRE(r.code == 0);
  const auto d = parse_dot(r.out);
  CHECK(d.nodes.size() == 3);
  CHECK(d.edges.size() == 2);
}

TEST_CASE("dsg-hom CSV") {
  const auto all = lines(run({"dsg-hom", fixture("glued_two_cycle.json").string()}).out);
  REQUIRE(all.size() == 5);
  CHECK(all[0] == "a,b,dim,level,history");
  CHECK(all[1] == "1,1,1,0,1");
  CHECK(all[2] == "1,2,0,0,0");
  const auto inf = run({"dsg-hom", fixture("local_product_n3.json").string(), "--pair", "1", "2"});
  REQUIRE(inf.code == 0);
  CHECK(lines(inf.out)[1].rfind("1,2,inf,", 0) == 0);
  CHECK(run({"dsg-hom", fixture("local_product_n3.json").string(), "--pair", "1", "9"}).code == 1);
}

TEST_CASE("syzygy iteration") {
  const auto r = run({"syzygy", fixture("local_product_n3.json").string(), "--node", "1", "--iterate", "3"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["syzygies"].size() == 3);
  CHECK(j["lambda_projective"] == false);
  CHECK(run({"syzygy", fixture("local_product_n3.json").string(), "--node", "7"}).code == 1);
}

TEST_CASE("v-structure and cm-count") {
  const auto v = nlohmann::json::parse(run({"v-structure", fixture("glued_two_cycle.json").string()}).out);
  CHECK(v["semisimple"] == true);
  CHECK(v["dim_end"] == 2);
  const auto w = nlohmann::json::parse(run({"v-structure", fixture("local_product_n3.json").string()}).out);
  CHECK(w["semisimple"] == false);
  const auto c = nlohmann::json::parse(run({"cm-count", fixture("local_product_n3.json").string()}).out);
  CHECK(c["indecomposable_cm_count"] == 8);
}

TEST_CASE("batch over the families") {
  const auto r1 = run({"batch", fixture("families").string()});
  REQUIRE(r1.code == 0);
  const auto rows = lines(r1.out);
  CHECK(rows.size() == 13);
  CHECK(rows[0] == "name,j_prime,hereditary,finite_gldim,gorenstein,iwanaga_gorenstein,sg_hom_finite,"
                   "finite_cm_type,indec_count,dim_end_dsg,error");
  CHECK(rows[1].rfind("alternating_pairs_s1,", 0) == 0);
  for (const char* jobs : {"2", "4", "16"}) CHECK(run({"batch", fixture("families").string(), "--jobs", jobs}).out == r1.out);
}

TEST_CASE("batch edge cases") {
  const auto empty = scratch_dir("empty");
  const auto e = run({"batch", empty.string()});
  CHECK(e.code == 0);
  CHECK(lines(e.out).size() == 1);

  const auto mixed = scratch_dir("mixed");
  fs::copy_file(fixture("glued_two_cycle.json"), mixed / "a.json");
  fs::copy_file(fixture("local_product_n2.json"), mixed / "c.json");
  std::ofstream(mixed / "b.json") << "{\"order\": [";
  std::ofstream(mixed / "notes.txt") << "ignored";
  const auto m = run({"batch", mixed.string(), "--jobs", "3"});
  CHECK(m.code == 1);
  const auto rows = lines(m.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[1].rfind("a,", 0) == 0);
  CHECK(rows[2].rfind("b,,,,,,,,,,", 0) == 0);
  CHECK(rows[3].rfind("c,", 0) == 0);
  CHECK(run({"batch", (mixed / "missing").string()}).code == 1);
}

TEST_CASE("oracle-check") {
  const auto r = run({"oracle-check", "--trials", "20", "--seed", "5"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["ok"] == true);
  ::setenv("BACKSTROM_SEED", "77", 1);
  const auto s = run({"oracle-check", "--trials", "3"});
  ::unsetenv("BACKSTROM_SEED");
  CHECK(nlohmann::json::parse(s.out)["seed"] == 77);
  CHECK(run({"oracle-check", fixture("glued_two_cycle.json").string()}).code == 0);
  CHECK(run({"oracle-check", fixture("field_extension_loop_n3.json").string()}).code == 1);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"classify", "/nonexistent.json"}).code == 1);
  CHECK(run({"batch", fixture("families").string(), "--jobs", "0"}).code == 1);
}
