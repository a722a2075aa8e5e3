#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dtg/certificate.hpp"
#include "dtg/graph.hpp"
#include "dtg/perm.hpp"

namespace dtg {

/// Bipartite graph on V and a copy V-bar: vertex v < n pairs with v + n.
/// Edges u v-bar for uv in E, and v v-bar for v in M.
struct AuxGraph {
  Graph graph;
  Graph origin;
  std::vector<Vertex> mid;  ///< M, ascending

  Vertex base_order() const noexcept { return origin.order(); }
  Vertex bar(Vertex v) const noexcept { return v < origin.order() ? v + origin.order() : v - origin.order(); }
};

/// ContractError unless M is a set of distinct vertices of g.
AuxGraph auxiliary_graph(const Graph& g, std::span<const Vertex> mid);

/// order[i] == bar(order[2n - 1 - i]) for every i.
bool is_symmetric(const AuxGraph& aux, const LinearOrder& order);

/// Maximum clique of least degree sum, as the heaviest decreasing
/// subsequence of o2-ranks read in o1 order with vertex weight n^2 - deg.
/// Ties go to the smallest-index predecessor, then the smallest-index end.
/// ContractError if (o1, o2) does not define g.
std::vector<Vertex> efficient_max_clique(const Graph& g, const LinearOrder& o1, const LinearOrder& o2);

/// Same objective from a transitive orientation of g: heaviest directed chain,
/// weight n^2 - deg. Needs only G, so it skips orienting the complement.
/// ContractError on an arc that is not an edge or a cyclic orientation.
std::vector<Vertex> efficient_max_clique(const Graph& g, const Orientation& d);

/// Symmetric orders defining aux.graph, or nullopt when aux.graph is not a
/// permutation graph. Twins of V are set aside, the twin-free core is ordered
/// as a bipartite permutation graph, and the symmetric one among o1, o2 and
/// their reversals is kept; twins go back next to their representative.
/// Requires a connected auxiliary graph; InternalContradiction when no
/// symmetric variant exists.
std::optional<OrderPair> symmetric_orderings(const AuxGraph& aux);

/// Certificate (0, 2) of aux.origin with mid-weight set aux.mid, from a
/// unit-slope diagram of aux.graph: w(v) = (x2(v) - x2(v-bar)) / 2.
WeightCertificate weights_from_symmetric(const AuxGraph& aux, const OrderPair& orders);

}  // namespace dtg
