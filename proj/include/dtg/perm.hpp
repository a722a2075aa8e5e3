#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dtg/graph.hpp"
#include "dtg/rational.hpp"

namespace dtg {

/// A permutation of 0..n-1 with its inverse.
class LinearOrder {
 public:
  LinearOrder() = default;
  /// Throws ContractError unless `seq` is a permutation of 0..seq.size()-1.
  explicit LinearOrder(std::vector<Vertex> seq);
  static LinearOrder identity(Vertex n);

  Vertex size() const noexcept { return static_cast<Vertex>(seq_.size()); }
  const std::vector<Vertex>& sequence() const noexcept { return seq_; }
  Vertex operator[](Vertex rank) const { return seq_[rank]; }
  Vertex position(Vertex v) const { return pos_[v]; }
  bool before(Vertex u, Vertex v) const { return pos_[u] < pos_[v]; }
  LinearOrder reversed() const;

  friend bool operator==(const LinearOrder& a, const LinearOrder& b) { return a.seq_ == b.seq_; }

 private:
  std::vector<Vertex> seq_;
  std::vector<Vertex> pos_;
};

struct OrderPair {
  LinearOrder first;
  LinearOrder second;
};

/// Segment v runs from (x1[v], 0) to (x2[v], 1).
struct PermutationDiagram {
  std::vector<Rational> x1;
  std::vector<Rational> x2;
};

/// Arcs (tail, head), one per edge.
struct Orientation {
  std::vector<Edge> arcs;
};

/// The unique candidate partner of `o1`: non-edges keep their relative order,
/// edges are reversed. nullopt when that relation is not a linear order
/// defining `g`.
std::optional<LinearOrder> forced_partner_order(const Graph& g, const LinearOrder& o1);

/// True iff the pairs ordered differently by `o1` and `o2` are exactly the
/// edges of `g`. Every edge is checked for a crossing and the inversion count
/// is compared with m, so the test runs in O((n + m) log n).
bool orders_define_graph(const Graph& g, const LinearOrder& o1, const LinearOrder& o2);

/// Transitive orientation by implication classes (G-decomposition), with the
/// result verified for transitivity. nullopt when g is not a comparability
/// graph.
std::optional<Orientation> transitive_orientation(const Graph& g);

/// General recognition. The complement is oriented on a dense bit-matrix, so
/// the order is capped at kMaxGeneralOrder (ContractError above).
inline constexpr Vertex kMaxGeneralOrder = 20000;
std::optional<OrderPair> permutation_orderings(const Graph& g);

/// Near-linear path for bipartite graphs; components are laid out in order of
/// their smallest vertex on both lines.
std::optional<OrderPair> bipartite_permutation_orderings(const Graph& g, const Bipartition& bip);

PermutationDiagram diagram_from_orderings(const LinearOrder& o1, const LinearOrder& o2);

/// O(n^2). Throws ContractError on a repeated coordinate within a line.
Graph graph_from_diagram(const PermutationDiagram& d);

/// Same question as graph_from_diagram(d) == g, in O((n + m) log n).
bool diagram_represents(const Graph& g, const PermutationDiagram& d);

/// Diagram with x2 = x1 + 1 on X and x2 = x1 - 1 on Y whose line orders are
/// `o1` and `o2`. Requires a connected graph defined by (o1, o2) with o1[0]
/// on side X; throws InternalContradiction when that fails.
PermutationDiagram unit_slope_diagram(const Graph& g, const Bipartition& bip, const LinearOrder& o1,
                                      const LinearOrder& o2);

bool neighborhood_equivalent(const Graph& g, const LinearOrder& a, const LinearOrder& b);

/// One "v x1 x2" line per vertex, rationals as p/q.
std::string format_diagram(const PermutationDiagram& d);
PermutationDiagram parse_diagram(std::string_view text);

}  // namespace dtg
