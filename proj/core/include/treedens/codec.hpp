#ifndef TREEDENS_CODEC_HPP
#define TREEDENS_CODEC_HPP

#include <string>
#include <string_view>

#include "treedens/graph.hpp"

namespace treedens {

enum class GraphFormat { Graph6, EdgeListJson };

/// Decodes a graph. graph6 follows the standard printable byte encoding
/// (63-offset bytes, upper-triangle bit packing); edge-list JSON is
/// {"n": int, "edges": [[u,v],...]} with 0-based unordered endpoints.
Graph parse_graph(std::string_view text, GraphFormat format);

std::string serialize_graph(const Graph& g, GraphFormat format);

} // namespace treedens

#endif
