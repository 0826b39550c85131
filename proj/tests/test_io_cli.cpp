#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "latcov/arith/errors.hpp"
#include "latcov/catalog/catalog.hpp"
#include "latcov/cli/app.hpp"
#include "latcov/io/json.hpp"
#include "oracle.hpp"

using namespace latcov;
using oracle::q;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "latcov");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(int(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

io::Json json_of(const Run& r) { return io::Json::parse(r.out); }

std::string temp_file(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("latcov_test_" + name);
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("polytope documents round trip") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    auto e = make(name);
    auto j = io::polytope_json(e.body, name);
    auto doc = io::parse_polytope(io::Json::parse(io::dump(j)));
    CHECK(doc.name == name);
    CHECK(doc.field == e.field);
    CHECK(doc.body == e.body);
  }
}

TEST_CASE("lattice documents round trip") {
  for (const auto& name : catalog_names())
    for (const auto& l : make(name).lattices) {
      auto doc = io::parse_lattice(io::lattice_json(l));
      CHECK(lattice_name(doc.lattice) == lattice_name(l));
      CHECK(doc.field == io::field_of(l));
      if (auto* lr = std::get_if<Lattice<Rational>>(&l)) CHECK(std::get<Lattice<Rational>>(doc.lattice).basis() == lr->basis());
    }
}

TEST_CASE("malformed documents") {
  using io::Json;
  CHECK_THROWS_AS(io::parse_polytope(Json{{"field", "rational"}, {"vertices", Json::array({Json::array({0.5, 0, 0})})}}),
                  ParseError);
  CHECK_THROWS_AS(io::parse_polytope(Json{{"field", "interval"}, {"vertices", Json::array()}}), ParseError);
  // vertices and halfspaces that describe different bodies
  auto j = io::polytope_json(AnyPolytope(octahedron()), "o");
  j["vertices"][0] = Json::array({"2", "0", "0"});
  CHECK_THROWS_AS(io::parse_polytope(j), GeometryError);
  auto bad = temp_file("bad.json", "{ not json");
  CHECK_THROWS_AS(io::read_json(bad), ParseError);
  std::filesystem::remove(bad);
}

TEST_CASE("dump is stable") {
  auto j = io::polytope_json(AnyPolytope(octahedron()), "o");
  auto s = io::dump(j);
  CHECK(s.back() == '\n');
  CHECK(io::dump(io::Json::parse(s)) == s);
}

TEST_CASE("cli exit codes") {
  CHECK(invoke({"gauge", "--catalog", "octahedron", "1/2", "1/3", "1/6"}).code == cli::kVerified);
  CHECK(invoke({"verify-packing", "--catalog", "octahedron"}).code == cli::kVerified);
  CHECK(invoke({"verify-covering", "--catalog", "octahedron", "--r", "7/6"}).code == cli::kVerified);
  CHECK(invoke({"verify-covering", "--catalog", "octahedron", "--r", "1"}).code == cli::kRefuted);
  CHECK(invoke({"verify-packing", "--catalog", "C8"}).code == cli::kUndecided);
  CHECK(invoke({"verify-covering", "--catalog", "octahedron", "--r", "1.2"}).code == cli::kInputError);
  CHECK(invoke({"gamma", "--catalog", "nope"}).code == cli::kInputError);
  CHECK(invoke({"frobnicate"}).code == cli::kInputError);
  CHECK(invoke({"gamma", "--catalog", "T"}).code == cli::kInputError);
}

TEST_CASE("cli reasons") {
  auto bad = invoke({"verify-covering", "--catalog", "octahedron", "--r", "1.2"});
  CHECK(bad.err.find("bad-literal") != std::string::npos);
  CHECK(invoke({"gamma", "--catalog", "nope"}).err.find("unknown-name") != std::string::npos);
  CHECK(invoke({"gamma", "--catalog", "T"}).err.find("no-lattice") != std::string::npos);
  CHECK(invoke({"gamma", "--polytope", "/nonexistent/x.json", "--lattice", "/nonexistent/y.json"}).err.find("io-error") !=
        std::string::npos);
  CHECK(invoke({"gauge", "--catalog", "C2", "--field", "rational", "1", "0", "0"}).err.find("field-mismatch") !=
        std::string::npos);

  auto miss = invoke({"verify-covering", "--catalog", "octahedron", "--r", "1", "--format", "json"});
  auto j = json_of(miss);
  CHECK(j["status"] == "refuted");
  CHECK(j["reason"] == "uncovered");
  auto und = json_of(invoke({"verify-packing", "--catalog", "C8", "--format", "json"}));
  CHECK(und["reason"] == "enclosure-straddles-2");
}

TEST_CASE("cli json reports") {
  auto g = json_of(invoke({"gauge", "--catalog", "octahedron", "1", "1", "1", "--format", "json"}));
  CHECK(g["gauge"] == "3");
  auto gm = json_of(invoke({"gamma", "--catalog", "octahedron", "--format", "json"}));
  CHECK(gm["command"] == "gamma");
  CHECK(gm["status"] == "verified");
  CHECK(gm.dump().find("7/6") != std::string::npos);
}

TEST_CASE("catalog dump files are accepted as inputs") {
  auto d = invoke({"catalog", "dump", "C7"});
  REQUIRE(d.code == 0);
  auto path = temp_file("c7.json", d.out);
  auto r = invoke({"gamma", "--polytope", path, "--lattice", path});
  CHECK(r.code == cli::kVerified);
  CHECK(r.out.rfind("7/6", 0) == 0);
  std::filesystem::remove(path);
}

TEST_CASE("cli output does not depend on the worker count") {
  auto a = invoke({"verify-theorem", "--workers", "1", "--no-fallback", "--no-lemmas", "--format", "json"});
  auto b = invoke({"verify-theorem", "--workers", "3", "--no-fallback", "--no-lemmas", "--format", "json"});
  CHECK(a.code == cli::kVerified);
  CHECK(a.out == b.out);
}

TEST_CASE("obj export writes a mesh") {
  auto path = (std::filesystem::temp_directory_path() / "latcov_test_o.obj").string();
  auto r = invoke({"export-obj", "--catalog", "octahedron", "--out", path});
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  CHECK(text.find("v ") != std::string::npos);
  CHECK(text.find("f ") != std::string::npos);
  std::filesystem::remove(path);
}
