#ifndef TREEDENS_IO_HPP
#define TREEDENS_IO_HPP

#include <string>
#include <string_view>

#include "treedens/construction.hpp"
#include "treedens/extraction.hpp"
#include "treedens/shortcuts.hpp"

namespace treedens {

// JSON schemas for the compound structures:
//   tree decomposition: {"tree_edges": [[i,j],...], "bags": [[v,...],...]}
//   shortcut paths:     {"paths": [[v0,v1,...],...]} (base graph travels separately)
//   bipartite model:    {"left": [[v,...],...], "right": [[v,...],...]}
//   witness:            {"subtree_vertices": [...], "subtree_edges": [[u,v],...],
//                        "kernel_preimage": [...], "embedding": {"(v,i)": host, "(v,j)*": host}}

std::string tree_decomposition_to_json(const TreeDecomposition& d);
TreeDecomposition tree_decomposition_from_json(std::string_view text);

std::string shortcut_paths_to_json(const ShortcutSystem& sys);
/// Attaches paths parsed from `text` to `base`.
ShortcutSystem shortcut_system_from_json(Graph base, std::string_view text);

std::string model_to_json(const BipartiteModel& model);
BipartiteModel model_from_json(std::string_view text, int p, int q);

std::string witness_to_json(const WitnessResult& witness);

} // namespace treedens

#endif
