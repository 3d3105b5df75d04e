#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "edgeposet/error.hpp"
#include "edgeposet/figures.hpp"
#include "edgeposet/io.hpp"

using namespace edgeposet;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no edgeposet::Error thrown");
  return ErrorKind::Internal;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("poset json round trip") {
  for (const auto& p : {figures::fig1(), figures::fig2(), boolean_algebra(3), figures::fig1_edges_drawn()}) {
    const auto back = poset_from_json(to_json(p));
    CHECK(back.same_structure(p));
    CHECK(back.labels() == p.labels());
  }
  const auto e = to_json(edge_poset(boolean_algebra(2)));
  CHECK(e["edges"].size() == 4);
  CHECK(e["edges"][0] == nlohmann::json::array({0, 1}));
}

TEST_CASE("malformed poset json") {
  CHECK(kind_of([] { poset_from_json(nlohmann::json::parse(R"({"covers": []})")); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { poset_from_json(nlohmann::json::parse(R"({"ranks": [0], "covers": [[0]]})")); }) ==
        ErrorKind::InvalidInput);
  CHECK(kind_of([] { poset_from_json(nlohmann::json::parse(R"({"ranks": [0, 2], "covers": [[0, 1]]})")); }) ==
        ErrorKind::NotGraded);
  CHECK(kind_of([] { read_poset_file("/nonexistent/poset.json"); }) == ErrorKind::InvalidInput);
}

TEST_CASE("dot output") {
  const auto dot = to_dot(figures::diamond());
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("rank=same") != std::string::npos);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
}

TEST_CASE("permutation json and generator files") {
  const auto g = Permutation::from_cycles(4, {{0, 2}});
  CHECK(permutation_from_json(to_json(g)) == g);
  const auto gens = parse_generator_lines("# a comment\n(1 2 3)\n\n(1 2)(3 4)\n", 4);
  REQUIRE(gens.size() == 2);
  CHECK(gens[1] == Permutation::from_cycles(4, {{0, 1}, {2, 3}}));
  try {
    parse_generator_lines("(1 2)\n(1 9)\n", 4);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("tree files") {
  const auto shape = tree_shape_from_json(nlohmann::json::parse(
      R"({"children": [{"children": [{}, {}]}, {"children": [{}, {}]}]})"));
  CHECK(shape.children.size() == 2);
  const auto path = std::filesystem::temp_directory_path() / "edgeposet_tree_test.json";
  std::ofstream(path) << R"({"children": [{}, {}, {}]})";
  CHECK(read_tree_file(path).leaves().size() == 3);
  std::filesystem::remove(path);
}

}  // TEST_SUITE
