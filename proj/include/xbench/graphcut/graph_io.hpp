#pragma once

#include <filesystem>
#include <iosfwd>

#include "xbench/graphcut/flow_network.hpp"

namespace xbench::graphcut {

// Text format, LF line endings, 0-based ids:
//   graph <n_vertices> <n_edges> <source> <sink>
//   e <from> <to> <capacity>        (n_edges times, in edge-id order)
void save_graph(const FlowNetwork& net, std::ostream& out);
void save_graph(const FlowNetwork& net, const std::filesystem::path& path);

// Throws ParseError carrying the offending line number.
FlowNetwork load_graph(std::istream& in);
FlowNetwork load_graph(const std::filesystem::path& path);

}  // namespace xbench::graphcut
