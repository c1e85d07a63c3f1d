#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "negsets/cli.hpp"
#include "negsets/dot.hpp"
#include "negsets/io.hpp"

using namespace negsets;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(NEGSETS_TEST_DATA) + "/" + name; }

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("balance") {
  auto r = run({"balance", data("triangle-one-neg.sg")});
  CHECK(r.code == cli::kPropertyFails);
  CHECK(r.out.find("negative circle: 0 1 2") != std::string::npos);
  CHECK(run({"balance", data("path-balanced.sg")}).code == cli::kOk);
}

TEST_CASE("acyclic") {
  auto r = run({"acyclic", data("minus-k5.sg")});
  CHECK(r.code == cli::kMinusK5);
  CHECK(r.out.find("{0,1,2,3,4}") != std::string::npos);

  auto w = run({"acyclic", data("walk.sg"), "--trace"});
  CHECK(w.code == cli::kOk);
  CHECK(w.out.find("switching: {0,1,4,5}") != std::string::npos);
  CHECK(w.out.find("step 14: 1 4 5") != std::string::npos);

  auto two = run({"acyclic", data("two-triangles.sg"), "--json"});
  CHECK(two.code == cli::kOk);
  auto j = nlohmann::json::parse(two.out);
  CHECK(j["result"]["components"].size() == 2);
}

TEST_CASE("packing") {
  auto r = run({"packing", data("c5-one-neg.sg")});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("packing number: 5") != std::string::npos);
  CHECK(run({"packing", data("path-balanced.sg")}).code == cli::kPrecondition);
  CHECK(run({"packing", data("empty.sg")}).code == cli::kPrecondition);
}

TEST_CASE("negation sets, minimality and frustration") {
  CHECK(run({"negation-check", data("triangle-one-neg.sg"), "--edges", "1-2"}).code == cli::kOk);
  CHECK(run({"negation-check", data("triangle-one-neg.sg"), "--edges", "{0-1, 1-2}"}).code ==
        cli::kPropertyFails);
  CHECK(run({"negation-check", data("triangle-one-neg.sg")}).code == cli::kUsage);
  CHECK(run({"negation-check", data("triangle-one-neg.sg"), "--edges", "0-9"}).code == cli::kUsage);
  CHECK(run({"negation-check", data("triangle-one-neg.sg"), "--edges", "0~1"}).code == cli::kUsage);

  CHECK(run({"minimal", data("triangle-one-neg.sg")}).code == cli::kOk);
  CHECK(run({"minimal", data("triangle-one-neg.sg"), "--edges", "0-1,0-2,1-2"}).code ==
        cli::kPropertyFails);
  CHECK(run({"minimal", data("triangle-one-neg.sg"), "--edges", "0-1,0-2"}).code == cli::kPrecondition);

  auto f = run({"frustration", data("minus-k5.sg")});
  CHECK(f.out == "frustration index: 4\n");
  CHECK(run({"frustration", data("minus-k5.sg"), "--max-n", "4"}).code == cli::kPrecondition);
}

TEST_CASE("certificates") {
  CHECK(run({"certify-minimum", data("k6-two-neg.sg")}).code == cli::kOk);
  CHECK(run({"certify-minimum", data("k6-two-neg.sg"), "--cert", data("k6-circles.json")}).code ==
        cli::kOk);
  CHECK(run({"certify-minimum", data("k6-two-neg.sg"), "--cert", data("k6-bad-circles.json")}).code ==
        cli::kPropertyFails);
  CHECK(run({"certify-minimum", data("k6-two-neg.sg"), "--cert", data("k6-pairs.json")}).code ==
        cli::kUsage);
  CHECK(run({"certify-minimum", data("minus-k5.sg")}).code == cli::kPropertyFails);
  CHECK(run({"certify-minimum", data("c5-one-neg.sg")}).code == cli::kPropertyFails);

  CHECK(run({"certify-unique", data("k6-two-neg.sg")}).code == cli::kOk);
  auto u = run({"certify-unique", data("k6-two-neg.sg"), "--cert", data("k6-pairs.json")});
  CHECK(u.code == cli::kOk);
  CHECK(u.out.find("oracle minimum check passed") != std::string::npos);
  CHECK(run({"certify-unique", data("minus-k5.sg")}).code == cli::kPropertyFails);
}

TEST_CASE("oracle-verify") {
  for (const char* f : {"c5-one-neg.sg", "minus-k5.sg", "k6-two-neg.sg", "walk.sg", "two-triangles.sg"}) {
    CAPTURE(f);
    auto r = run({"oracle-verify", data(f)});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
}

TEST_CASE("usage and parse errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"bogus"}).code == cli::kUsage);
  CHECK(run({"balance"}).code == cli::kUsage);
  CHECK(run({"balance", data("missing.sg")}).code == cli::kUsage);
  CHECK(run({"balance", data("c5-one-neg.sg"), "--trace"}).code == cli::kUsage);
  auto bad = std::filesystem::temp_directory_path() / "negsets_cli_bad.sg";
  std::ofstream(bad) << "p sg 3 2\ne 0 1 +\ne 0 1 -\n";
  auto r = run({"balance", bad.string()});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("line 3") != std::string::npos);
  std::filesystem::remove(bad);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("json output is deterministic") {
  std::vector<std::string> args{"packing", data("c5-one-neg.sg"), "--json"};
  auto a = run(args), b = run(args);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["command"] == "packing");
  CHECK(j["result"]["components"][0]["packing_number"] == 5);
  CHECK(j["result"]["components"][0]["family"].size() == 5);
}

TEST_CASE("dot export") {
  CHECK(export_dot(SignedGraph()) == "graph G {\n  node [shape=circle];\n}\n");
  auto tri = read_sg_file(data("triangle-one-neg.sg"));
  auto dot = export_dot(tri);
  std::size_t dashed = 0;
  for (auto p = dot.find("dashed"); p != std::string::npos; p = dot.find("dashed", p + 1)) ++dashed;
  CHECK(dashed == 1);
  CHECK(dot.find("0 -- 1 [color=red style=dashed]") != std::string::npos);

  auto r = run({"export-dot", data("c5-one-neg.sg"), "--family"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == slurp(data("c5-family.dot")));
  std::set<std::string> colors;
  for (std::size_t i = 0; i < 5; ++i) colors.insert(family_color(i));
  for (const auto& c : colors) CHECK(r.out.find("color=" + c) != std::string::npos);
  CHECK(colors.size() == 5);
}
