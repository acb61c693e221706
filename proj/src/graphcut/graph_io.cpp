#include "xbench/graphcut/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "xbench/errors.hpp"

namespace xbench::graphcut {

void save_graph(const FlowNetwork& net, std::ostream& out) {
  out << "graph " << net.vertex_count() << ' ' << net.edge_count() << ' ' << net.source() << ' '
      << net.sink() << '\n';
  for (const Edge& e : net.edges()) {
    out << "e " << e.from << ' ' << e.to << ' ' << e.capacity << '\n';
  }
}

void save_graph(const FlowNetwork& net, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  save_graph(net, out);
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <class T>
T parse_number(std::string_view token, std::size_t line, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(std::string("invalid ") + what + " '" + std::string(token) + "'", line);
  }
  return value;
}

}  // namespace

FlowNetwork load_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      throw ParseError("CR line ending (expected LF)", line_no);
    }
    return true;
  };

  if (!next_line()) throw ParseError("empty graph file", 1);
  const auto header = split(line);
  if (header.size() != 5 || header[0] != "graph") {
    throw ParseError("expected 'graph <n_vertices> <n_edges> <source> <sink>'", line_no);
  }
  const auto n = parse_number<std::uint64_t>(header[1], line_no, "vertex count");
  const auto m = parse_number<std::uint64_t>(header[2], line_no, "edge count");
  const auto s = parse_number<VertexId>(header[3], line_no, "source id");
  const auto t = parse_number<VertexId>(header[4], line_no, "sink id");
  if (n > std::numeric_limits<VertexId>::max()) throw ParseError("vertex count too large", line_no);
  if (s >= n || t >= n) throw ParseError("terminal id out of range", line_no);
  if (s == t) throw ParseError("source and sink must differ", line_no);

  FlowNetwork net(static_cast<std::size_t>(n), s, t);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!next_line()) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i),
                       line_no + 1);
    }
    const auto tok = split(line);
    if (tok.size() != 4 || tok[0] != "e") {
      throw ParseError("expected 'e <from> <to> <capacity>'", line_no);
    }
    const auto from = parse_number<VertexId>(tok[1], line_no, "vertex id");
    const auto to = parse_number<VertexId>(tok[2], line_no, "vertex id");
    const auto cap = parse_number<Capacity>(tok[3], line_no, "capacity");
    if (from >= n || to >= n) throw ParseError("vertex id out of range", line_no);
    if (from == to) throw ParseError("self-loop", line_no);
    if (cap < 0) throw ParseError("negative capacity", line_no);
    net.add_edge(from, to, cap);
  }
  while (next_line()) {
    if (!line.empty()) throw ParseError("unexpected content after last edge", line_no);
  }
  return net;
}

FlowNetwork load_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return load_graph(in);
}

}  // namespace xbench::graphcut
