#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qubobench/common.hpp"

namespace qubobench {

/// Undirected simple graph. Doubles as the graphene supercell lattice (when
/// supercell_dim is set) and as a generic logical adjacency for loaded
/// instances and embeddings.
struct LatticeGraph {
  int n_sites = 0;
  std::vector<std::pair<int, int>> edges;  // normalized i < j, sorted, unique
  std::optional<int> supercell_dim;        // set only for generated supercells

  std::vector<int> degrees() const;
  std::vector<std::vector<int>> adjacency_list() const;
  bool is_connected() const;
  bool is_bipartite() const;
  bool has_edge(int i, int j) const;
};

/// n x n periodic tiling of the two-site hexagonal unit cell: N = 2*dim^2
/// vertices, 3-regular, bipartite. Vertex index = 2*(row*dim + col) + sublattice.
/// dim < 2 is rejected: the periodic wrap would produce duplicate edges.
LatticeGraph build_supercell(int supercell_dim);

/// Parses "N <count>" followed by one "i j" pair per line. Rejects self-loops,
/// duplicate pairs and out-of-range indices, naming the offending line.
/// Degree regularity is not enforced for loaded graphs.
LatticeGraph load_graph(const std::string& edge_list_text);

std::string to_edge_list(const LatticeGraph& g);

/// Shared edge-list parser; header_token is "N" for logical graphs and "PHYS"
/// for hardware topologies.
std::pair<int, std::vector<std::pair<int, int>>> parse_edge_list(const std::string& text,
                                                                 const std::string& header_token);
std::string format_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                             const std::string& header_token);

}  // namespace qubobench
