#include <catch_amalgamated.hpp>

#include "homcx/io.hpp"
#include "test_support.hpp"

using namespace homcx;
using homcx::io::json;

namespace {

std::string data(const std::string& name) { return std::string(HOMCX_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("graph fixtures load and round trip") {
  for (auto [file, fam] : std::vector<std::pair<const char*, const char*>>{
           {"K1.json", "K1"}, {"K2.json", "K2"}, {"K3.json", "K3"}, {"C4.json", "C4"},
           {"C5.json", "C5"}, {"P3.json", "P3"}, {"Star3.json", "Star3"}}) {
    INFO(file);
    Graph g = io::graph_from_json(io::read_json_file(data(file)));
    CHECK(g == graph_from_family(fam));
    CHECK(io::graph_from_json(io::to_json(g)) == g);
  }
  Graph tree = io::graph_from_json(io::read_json_file(data("tree6.json")));
  CHECK(tree.vertex_count() == 6);
  CHECK(tree.edges().size() == 5);
}

TEST_CASE("malformed graphs are rejected") {
  CHECK_THROWS_AS(io::graph_from_json(json::parse(R"({"edges": []})")), std::invalid_argument);
  CHECK_THROWS_AS(io::graph_from_json(json::parse(R"({"p": 2, "edges": [[1]]})")), std::invalid_argument);
  CHECK_THROWS_AS(io::graph_from_json(json::parse(R"({"p": 2, "edges": [[1, 1]]})")), std::invalid_argument);
  CHECK_THROWS_AS(io::graph_from_json(json::parse(R"({"p": 2, "edges": [[1, 3]]})")), std::invalid_argument);
  CHECK_THROWS_AS(io::read_json_file(data("no_such_file.json")), std::runtime_error);
}

TEST_CASE("the example chain fixture is the worked example") {
  Chain c = io::chain_from_json(io::read_json_file(data("example_chain.json")));
  CHECK(c == testing_support::example_cycle());
  CHECK(io::chain_from_json(io::to_json(c)) == c);

  Chain empty = io::chain_from_json(io::read_json_file(data("empty_chain.json")));
  CHECK(empty.empty());
  CHECK(empty.dim() == 2);
}

TEST_CASE("certificates round trip") {
  Graph c4 = cycle_graph(4);
  const Chain c = testing_support::example_cycle();
  auto red = reduce_cycle(c4, 7, c, 2);
  auto back = io::certificate_from_json(io::to_json(red.certificate));
  CHECK(back.t == red.certificate.t);
  CHECK(back.additions == red.certificate.additions);
  CHECK(verify_certificate(c4, 7, c, red.result, back).ok);
}

TEST_CASE("paths and moves round trip") {
  EdgePath hex = io::path_from_json(io::read_json_file(data("hexagon_loop.json")));
  REQUIRE(hex.size() == 6);
  CHECK(hex.vertices[0] == Coloring{1, 2});
  CHECK(io::path_from_json(io::to_json(hex)) == hex);
  CHECK(io::path_from_json(json::parse("[[1, 2], [1, 3]]")).size() == 2);

  auto lc = contract_loop(complete_graph(2), 4, hex);
  json moves = io::to_json(lc.moves);
  REQUIRE(moves.size() == lc.moves.size());
  std::vector<HomotopyMove> back;
  for (const auto& m : moves) back.push_back(io::move_from_json(m));
  CHECK(back == lc.moves);
  CHECK(moves[0].at("position").get<int>() >= 1);

  CHECK_THROWS_AS(io::move_from_json(json::parse(R"({"kind": "Teleport", "position": 1, "support": [[1]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(io::move_from_json(json::parse(R"({"kind": "DropRepeat", "position": 0, "support": [[1]]})")),
                  std::invalid_argument);
}

TEST_CASE("homology and reports serialize") {
  auto h = homology_summary(enumerate_skeleton(complete_graph(2), 4, 3), 2);
  json j = io::to_json(h);
  CHECK(j.at("betti") == json::parse("[1, 0, 1]"));
  CHECK(j.at("torsion").size() == 3);

  BigInt huge = BigInt(1) << 80;
  CHECK(io::to_json(huge).is_string());
  CHECK(io::to_json(BigInt(12)) == json(12));

  json rep = io::to_json(connectivity_report(cycle_graph(5), 5));
  CHECK(rep.at("verdict") == "PASS");
  CHECK(rep.at("vgap") == 2);
  CHECK(rep.contains("homology"));
}
