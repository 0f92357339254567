#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "gpnum/constructions.hpp"
#include "gpnum/error.hpp"
#include "gpnum/io.hpp"
#include "oracle.hpp"

using namespace gpnum;

namespace {

std::size_t parse_offset(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("expected a parse error for '" << std::string(text) << "'");
  return 0;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("gpnum_test_" + name);
}

}  // namespace

TEST_CASE("graph6 of K2 is A_") {
  CHECK(to_graph6(complete(2)) == "A_");
  CHECK(from_graph6("A_") == complete(2));
}

TEST_CASE("graph6 matches the reference encoder") {
  std::ifstream in(std::string(GPNUM_TEST_DATA_DIR) + "/graph6_reference.txt");
  REQUIRE(in);
  std::string line;
  int cases = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    REQUIRE(tab != std::string::npos);
    const std::string expr = line.substr(0, tab), expected = line.substr(tab + 1);
    CAPTURE(expr);
    const Graph g = graph_from_expr(expr);
    CHECK(to_graph6(g) == expected);
    CHECK(from_graph6(expected) == g);
    ++cases;
  }
  CHECK(cases >= 10);
}

TEST_CASE("graph6 header forms") {
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(from_graph6("?").order() == 0);
  CHECK(to_graph6(edgeless(62))[0] == static_cast<char>(62 + 63));
  const std::string g63 = to_graph6(edgeless(63));
  CHECK(g63.substr(0, 4) == "~??~");
  const std::string big = to_graph6(edgeless(258));
  CHECK(big.substr(0, 4) == "~?CA");
  CHECK(from_graph6(big).order() == 258);
  // eight-byte header: order 258048 is beyond the supported range
  CHECK_THROWS_AS(from_graph6("~~?????~"), ParseError);
}

TEST_CASE("graph6 accepts an optional header and trailing newline") {
  CHECK(from_graph6(">>graph6<<D~{\n") == complete(5));
  CHECK(from_graph6("D~{\r\n") == complete(5));
  CHECK(parse_graph("D~{") == complete(5));
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {1u, 2u, 5u, 6u, 7u, 12u, 40u, 62u, 63u, 64u, 100u}) {
    const Graph g = oracle::random_graph(n, 0.3, rng);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("graph6 parse errors report byte offsets") {
  CHECK(parse_offset("D~ {") == 2);
  CHECK(parse_offset(">>graph6<<D~ {") == 12);
  CHECK(parse_offset("D~") == 2);      // truncated adjacency data
  CHECK(parse_offset("A_x") == 2);     // trailing byte
  CHECK(parse_offset("") == 0);
  CHECK(parse_offset("~?") == 2);      // truncated order field
  CHECK(parse_offset("\x7f") == 0);
}

TEST_CASE("JSON sidecar") {
  SUBCASE("labels survive the round trip") {
    const Graph g = kneser(5, 2);
    const std::string text = to_json_sidecar(g);
    const Graph back = from_json_sidecar(text);
    CHECK(back == g);
    CHECK(back.labels() == g.labels());
    CHECK(text.rfind(R"({"n":10,"edges":[[0,7],)", 0) == 0);
  }
  SUBCASE("unlabeled graphs omit labels") {
    CHECK(to_json_sidecar(path(3)) == R"({"n":3,"edges":[[0,1],[1,2]]})");
    CHECK(from_json_sidecar(R"({"n":2})") == edgeless(2));
  }
  SUBCASE("invalid documents") {
    CHECK(parse_offset(R"({"n":3,"edges":[[0,1],}})") == 22);
    CHECK_THROWS_AS(from_json_sidecar(R"({"edges":[]})"), ParseError);
    CHECK_THROWS_AS(from_json_sidecar(R"({"n":-1})"), ParseError);
    CHECK_THROWS_AS(from_json_sidecar(R"({"n":3,"edges":[[0,3]]})"), ParseError);
    CHECK_THROWS_AS(from_json_sidecar(R"({"n":3,"edges":[[0,0]]})"), ParseError);
    CHECK_THROWS_AS(from_json_sidecar(R"({"n":3,"edges":[[0]]})"), ParseError);
    CHECK_THROWS_AS(from_json_sidecar(R"({"n":2,"labels":["a"]})"), ParseError);
    CHECK_THROWS_AS(from_json_sidecar(R"({"n":2,"labels":[1,2]})"), ParseError);
  }
}

TEST_CASE("files") {
  const Graph k5 = complete(5);
  const auto g6 = temp_file("k5.g6"), js = temp_file("petersen.json");
  write_graph(k5, g6, GraphFormat::graph6);
  CHECK(read_graph(g6) == k5);
  std::ifstream raw(g6);
  std::stringstream bytes;
  bytes << raw.rdbuf();
  CHECK(bytes.str() == "D~{\n");

  const Graph p = kneser(5, 2);
  write_graph(p, js, GraphFormat::json);
  const Graph back = read_graph(js);
  CHECK(back == p);
  CHECK(back.labels() == p.labels());
  std::filesystem::remove(g6);
  std::filesystem::remove(js);
  CHECK_THROWS_AS(read_graph(temp_file("missing.g6")), InputError);

  const auto bad = temp_file("bad.g6");
  std::ofstream(bad) << "D~!{\n";
  try {
    read_graph(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  std::filesystem::remove(bad);
}
