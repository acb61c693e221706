#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "xbench/errors.hpp"
#include "xbench/graphcut/bk_maxflow.hpp"
#include "xbench/graphcut/expansion.hpp"
#include "xbench/graphcut/graph_io.hpp"

using namespace xbench;
using namespace xbench::graphcut;

namespace {

std::string save_to_string(const FlowNetwork& net) {
  std::ostringstream out;
  save_graph(net, out);
  return out.str();
}

FlowNetwork load_from_string(const std::string& text) {
  std::istringstream in(text);
  return load_graph(in);
}

int parse_error_line(const std::string& text) {
  try {
    load_from_string(text);
  } catch (const ParseError& e) {
    return static_cast<int>(e.line());
  }
  return -1;
}

}  // namespace

TEST_SUITE("graph_io") {

TEST_CASE("terminals-only network") {
  const FlowNetwork net(2, 0, 1);
  const std::string text = save_to_string(net);
  CHECK(text == "graph 2 0 0 1\n");
  CHECK(load_from_string(text).same_structure(net));
}

TEST_CASE("diamond is byte stable") {
  FlowNetwork net(4, 0, 3);
  net.add_edge(0, 1, 3);
  net.add_edge(0, 2, 2);
  net.add_edge(1, 3, 2);
  net.add_edge(2, 3, 3);
  net.add_edge(1, 2, 1);
  const std::string text = save_to_string(net);
  CHECK(text == "graph 4 5 0 3\ne 0 1 3\ne 0 2 2\ne 1 3 2\ne 2 3 3\ne 1 2 1\n");
  const FlowNetwork back = load_from_string(text);
  CHECK(back.same_structure(net));
  CHECK(save_to_string(back) == text);
}

TEST_CASE("random networks round trip") {
  Rng rng(6);
  for (int round = 0; round < 50; ++round) {
    const FlowNetwork net = oracle::to_flow_network(oracle::random_network(rng, 25, 1'000'000));
    const std::string text = save_to_string(net);
    const FlowNetwork back = load_from_string(text);
    REQUIRE(back.same_structure(net));
    REQUIRE(save_to_string(back) == text);
  }
}

TEST_CASE("150x150 expansion graph re-solves to the same flow") {
  Rng rng(42);
  const GrayImage img = generate_test_image(150, 150, Pattern::blobs, rng);
  const GrayImage lab = threshold(img, 128);
  ExpansionGraph g = build_expansion_graph(lab, EnergyModel::binary(img, 1), 255);
  const Capacity before = bk_maxflow(g.net).max_flow;
  FlowNetwork back = load_from_string(save_to_string(g.net));
  CHECK(back.same_structure(g.net));
  CHECK(bk_maxflow(back).max_flow == before);
}

TEST_CASE("file round trip") {
  FlowNetwork net(3, 2, 0);
  net.add_edge(2, 1, 5);
  net.add_edge(1, 0, 4);
  const auto path = std::filesystem::temp_directory_path() / "xbench_graph_io_test.graph";
  save_graph(net, path);
  CHECK(load_graph(path).same_structure(net));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_graph(path), Error);
}

TEST_CASE("malformed files name the offending line") {
  CHECK(parse_error_line("") == 1);
  CHECK(parse_error_line("grph 2 0 0 1\n") == 1);
  CHECK(parse_error_line("graph 2 0 0 0\n") == 1);
  CHECK(parse_error_line("graph 2 0 0 2\n") == 1);
  CHECK(parse_error_line("graph 2 x 0 1\n") == 1);
  CHECK(parse_error_line("graph 3 2 0 2\ne 0 1 4\n") == 3);
  CHECK(parse_error_line("graph 3 1 0 2\ne 0 1 -4\n") == 2);
  CHECK(parse_error_line("graph 3 1 0 2\ne 0 7 4\n") == 2);
  CHECK(parse_error_line("graph 3 1 0 2\ne 1 1 4\n") == 2);
  CHECK(parse_error_line("graph 3 1 0 2\nedge 0 1 4\n") == 2);
  CHECK(parse_error_line("graph 3 1 0 2\ne 0 1 4.5\n") == 2);
  CHECK(parse_error_line("graph 3 1 0 2\ne 0 1 4\ne 1 2 3\n") == 3);
  CHECK(parse_error_line("graph 3 1 0 2\r\ne 0 1 4\n") == 1);
  CHECK(parse_error_line("graph 3 1 0 2\ne 0 1 4\n\n") == -1);
}

}
