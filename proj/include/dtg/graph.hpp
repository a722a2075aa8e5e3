#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dtg {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbors are kept as sorted arrays (CSR). Graphs with at most
/// `kDenseLimit` vertices additionally carry a packed adjacency bit-matrix so
/// that `adjacent` is a single bit test; larger graphs answer membership by
/// binary search over the smaller endpoint's neighbor array.
class Graph {
 public:
  static constexpr Vertex kDenseLimit = 4096;

  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(Vertex n);

  /// Duplicate edges collapse. Throws ContractError on self-loops or indices
  /// outside [0, n).
  static Graph from_edges(Vertex n, std::span<const Edge> edges);

  Vertex order() const noexcept { return n_; }
  std::int64_t size() const noexcept { return static_cast<std::int64_t>(adj_.size() / 2); }

  bool adjacent(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  Vertex degree(Vertex v) const { return static_cast<Vertex>(offsets_[v + 1] - offsets_[v]); }

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.adj_ == b.adj_;
  }

 private:
  Vertex n_ = 0;
  std::vector<std::int64_t> offsets_{0};
  std::vector<Vertex> adj_;
  std::vector<std::uint64_t> bits_;
  std::size_t words_per_row_ = 0;
};

/// Two independent sides covering V. `side[v]` is 0 for X, 1 for Y.
struct Bipartition {
  std::vector<Vertex> x;
  std::vector<Vertex> y;
  std::vector<std::uint8_t> side;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;  ///< new label -> host vertex
};

/// First line n, then one "u v" per line; '#' starts a comment. ParseError
/// carries the 1-based line.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// Edge-list when the first non-blank byte is a digit or '#', graph6 otherwise.
Graph parse_graph_auto(std::string_view text);

Graph complement(const Graph& g);

/// Vertices of `s` are relabeled 0..|s|-1 in the order given.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// Connected components, each sorted; components ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// A 2-coloring with the smallest vertex of each component on X, or nullopt
/// when an odd cycle exists.
std::optional<Bipartition> bipartition(const Graph& g);

bool is_clique(const Graph& g, std::span<const Vertex> s);

/// Iterated removal of isolated or dominating vertices.
bool is_threshold(const Graph& g);

/// Induced copy of `pattern` (order <= 6) in `host`: result[i] is the host
/// vertex playing pattern vertex i. Plain backtracking with degree pruning.
std::optional<std::vector<Vertex>> find_induced_pattern(const Graph& host, const Graph& pattern);

Graph disjoint_union(const Graph& a, const Graph& b);

namespace patterns {
Graph complete(Vertex n);
Graph path(Vertex n);
Graph cycle(Vertex n);
Graph star(Vertex leaves);  ///< center 0
Graph bull();               ///< triangle 0-1-2, pendants 3 on 1 and 4 on 2
Graph butterfly();          ///< triangles 0-1-2 and 0-3-4
Graph gem();                ///< path 0-1-2-3 plus 4 adjacent to all
Graph house();              ///< square 0-1-2-3 plus roof 4 on 0 and 1
Graph wheel4();             ///< square 0-1-2-3 plus hub 4
Graph co_fork();
Graph co_banner();          ///< complement of square-with-pendant
Graph co_p2_p3();           ///< complement of P2 + P3
Graph paw();                ///< triangle 0-1-2 plus pendant 3 on 0
Graph two_k2();
Graph two_k3();
Graph bipartite_net();
Graph bipartite_tent();
}  // namespace patterns

}  // namespace dtg
