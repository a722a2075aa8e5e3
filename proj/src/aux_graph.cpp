#include "dtg/aux_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "dtg/errors.hpp"

namespace dtg {

AuxGraph auxiliary_graph(const Graph& g, std::span<const Vertex> mid) {
  const Vertex n = g.order();
  std::vector<Vertex> m(mid.begin(), mid.end());
  std::sort(m.begin(), m.end());
  if (std::adjacent_find(m.begin(), m.end()) != m.end()) throw ContractError("auxiliary_graph: repeated vertex in M");
  if (!m.empty() && (m.front() < 0 || m.back() >= n)) throw ContractError("auxiliary_graph: M is not a subset of V");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(2 * g.size()) + m.size());
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(u, v + n);
    edges.emplace_back(v, u + n);
  }
  for (Vertex v : m) edges.emplace_back(v, v + n);
  return {Graph::from_edges(2 * n, edges), g, std::move(m)};
}

bool is_symmetric(const AuxGraph& aux, const LinearOrder& order) {
  const Vertex size = order.size();
  if (size != 2 * aux.base_order()) return false;
  for (Vertex i = 0; i < size; ++i) {
    if (order[i] != aux.bar(order[size - 1 - i])) return false;
  }
  return true;
}

std::vector<Vertex> efficient_max_clique(const Graph& g, const LinearOrder& o1, const LinearOrder& o2) {
  if (!orders_define_graph(g, o1, o2)) throw ContractError("efficient_max_clique: orders do not define the graph");
  const Vertex n = g.order();
  if (n == 0) return {};
  const std::int64_t nn = static_cast<std::int64_t>(n) * n;
  // Best chain value ending at each vertex; chains are read in o1 order and
  // must decrease in o2 rank. Fenwick tree over q = n - 1 - rank2 keeps the
  // best (value, -vertex) among the processed vertices with smaller q.
  using Best = std::pair<std::int64_t, Vertex>;  // (value, -vertex)
  const Best none{-1, 0};
  std::vector<Best> tree(static_cast<std::size_t>(n) + 1, none);
  std::vector<std::int64_t> value(static_cast<std::size_t>(n));
  std::vector<Vertex> pred(static_cast<std::size_t>(n), -1);
  Best overall = none;
  for (Vertex i = 0; i < n; ++i) {
    const Vertex v = o1[i];
    const Vertex q = n - 1 - o2.position(v);
    Best best = none;
    for (Vertex k = q; k > 0; k -= k & -k) best = std::max(best, tree[k]);
    value[v] = nn - g.degree(v) + (best.first >= 0 ? best.first : 0);
    pred[v] = best.first >= 0 ? -best.second : -1;
    const Best here{value[v], -v};
    for (Vertex k = q + 1; k <= n; k += k & -k) tree[k] = std::max(tree[k], here);
    overall = std::max(overall, here);
  }
  std::vector<Vertex> clique;
  for (Vertex v = -overall.second; v >= 0; v = pred[v]) clique.push_back(v);
  std::sort(clique.begin(), clique.end());
  return clique;
}

std::vector<Vertex> efficient_max_clique(const Graph& g, const Orientation& d) {
  const Vertex n = g.order();
  if (static_cast<std::int64_t>(d.arcs.size()) != g.size()) throw ContractError("efficient_max_clique: not one arc per edge");
  if (n == 0) return {};
  const std::int64_t nn = static_cast<std::int64_t>(n) * n;
  std::vector<std::vector<Vertex>> in(static_cast<std::size_t>(n));
  std::vector<Vertex> outdeg(static_cast<std::size_t>(n), 0), indeg(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(n));
  for (auto [u, v] : d.arcs) {
    if (!g.adjacent(u, v)) throw ContractError("efficient_max_clique: arc is not an edge");
    out[u].push_back(v);
    in[v].push_back(u);
    ++indeg[v];
  }
  // Kahn order; the heaviest chain of a transitive orientation is a clique.
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    if (indeg[v] == 0) order.push_back(v);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : out[order[i]]) {
      if (--indeg[w] == 0) order.push_back(w);
    }
  }
  if (static_cast<Vertex>(order.size()) != n) throw ContractError("efficient_max_clique: orientation has a cycle");
  using Best = std::pair<std::int64_t, Vertex>;  // (value, -vertex)
  std::vector<std::int64_t> value(static_cast<std::size_t>(n));
  std::vector<Vertex> pred(static_cast<std::size_t>(n), -1);
  Best overall{-1, 0};
  for (Vertex v : order) {
    Best best{-1, 0};
    for (Vertex u : in[v]) best = std::max(best, Best{value[u], -u});
    value[v] = nn - g.degree(v) + (best.first >= 0 ? best.first : 0);
    pred[v] = best.first >= 0 ? -best.second : -1;
    overall = std::max(overall, Best{value[v], -v});
  }
  std::vector<Vertex> clique;
  for (Vertex v = -overall.second; v >= 0; v = pred[v]) clique.push_back(v);
  std::sort(clique.begin(), clique.end());
  return clique;
}

std::optional<OrderPair> symmetric_orderings(const AuxGraph& aux) {
  const Vertex n = aux.base_order();
  const Graph& h = aux.graph;
  if (n == 0) return OrderPair{LinearOrder::identity(0), LinearOrder::identity(0)};

  // Twin classes of V (their bars form the matching classes of V-bar).
  std::vector<Vertex> reps;
  std::vector<std::vector<Vertex>> twins_of;
  {
    std::vector<Vertex> vs(static_cast<std::size_t>(n));
    std::iota(vs.begin(), vs.end(), 0);
    auto same = [&](Vertex a, Vertex b) {
      auto na = h.neighbors(a);
      auto nb = h.neighbors(b);
      return std::equal(na.begin(), na.end(), nb.begin(), nb.end());
    };
    std::stable_sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) {
      auto na = h.neighbors(a);
      auto nb = h.neighbors(b);
      return std::lexicographical_compare(na.begin(), na.end(), nb.begin(), nb.end());
    });
    for (std::size_t i = 0; i < vs.size();) {
      std::size_t j = i + 1;
      while (j < vs.size() && same(vs[i], vs[j])) ++j;
      reps.push_back(vs[i]);
      twins_of.emplace_back(vs.begin() + static_cast<std::ptrdiff_t>(i) + 1, vs.begin() + static_cast<std::ptrdiff_t>(j));
      i = j;
    }
  }
  const auto k = static_cast<Vertex>(reps.size());

  // Core: rep i -> i, bar(rep i) -> i + k.
  std::vector<Vertex> core_to_aux(static_cast<std::size_t>(2 * k));
  std::vector<Vertex> aux_to_core(static_cast<std::size_t>(2 * n), -1);
  for (Vertex i = 0; i < k; ++i) {
    core_to_aux[i] = reps[i];
    core_to_aux[i + k] = aux.bar(reps[i]);
    aux_to_core[reps[i]] = i;
    aux_to_core[aux.bar(reps[i])] = i + k;
  }
  std::vector<Edge> core_edges;
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex w : h.neighbors(reps[i])) {
      if (aux_to_core[w] >= 0) core_edges.emplace_back(i, aux_to_core[w]);
    }
  }
  const Graph core = Graph::from_edges(2 * k, core_edges);
  Bipartition bip;
  bip.side.assign(static_cast<std::size_t>(2 * k), 0);
  for (Vertex i = 0; i < k; ++i) {
    bip.x.push_back(i);
    bip.y.push_back(i + k);
    bip.side[i + k] = 1;
  }
  auto orders = bipartite_permutation_orderings(core, bip);
  if (!orders) return std::nullopt;

  auto core_symmetric = [&](const LinearOrder& o) {
    for (Vertex i = 0; i < 2 * k; ++i) {
      const Vertex a = o[i];
      const Vertex b = o[2 * k - 1 - i];
      if (a != (b < k ? b + k : b - k)) return false;
    }
    return true;
  };
  std::optional<LinearOrder> chosen;
  for (const LinearOrder& o : {orders->first, orders->second, orders->first.reversed(), orders->second.reversed()}) {
    if (core_symmetric(o)) {
      chosen = o;
      break;
    }
  }
  if (!chosen) throw InternalContradiction("symmetric_orderings: no symmetric variant of the core orders");
  auto partner = forced_partner_order(core, *chosen);
  if (!partner) throw InternalContradiction("symmetric_orderings: symmetric core order has no partner");

  // A representative r expands to r, its twins ascending; bar(r) to the bars
  // of the twins descending, then bar(r).
  auto expand = [&](const LinearOrder& o) {
    std::vector<Vertex> seq;
    seq.reserve(static_cast<std::size_t>(2 * n));
    for (Vertex c : o.sequence()) {
      if (c < k) {
        seq.push_back(reps[c]);
        seq.insert(seq.end(), twins_of[c].begin(), twins_of[c].end());
      } else {
        const auto& t = twins_of[c - k];
        for (auto it = t.rbegin(); it != t.rend(); ++it) seq.push_back(aux.bar(*it));
        seq.push_back(aux.bar(reps[c - k]));
      }
    }
    return LinearOrder(std::move(seq));
  };
  OrderPair result{expand(*chosen), expand(*partner)};
  if (!is_symmetric(aux, result.first) || !is_symmetric(aux, result.second) ||
      !orders_define_graph(h, result.first, result.second)) {
    throw InternalContradiction("symmetric_orderings: expanded orders fail verification");
  }
  return result;
}

WeightCertificate weights_from_symmetric(const AuxGraph& aux, const OrderPair& orders) {
  const Vertex n = aux.base_order();
  LinearOrder o1 = orders.first;
  LinearOrder o2 = orders.second;
  if (n > 0 && o1[0] >= n) {
    o1 = o1.reversed();
    o2 = o2.reversed();
  }
  Bipartition bip;
  bip.side.assign(static_cast<std::size_t>(2 * n), 0);
  for (Vertex v = 0; v < n; ++v) {
    bip.x.push_back(v);
    bip.y.push_back(v + n);
    bip.side[v + n] = 1;
  }
  const PermutationDiagram d = unit_slope_diagram(aux.graph, bip, o1, o2);
  WeightCertificate cert{std::vector<Rational>(static_cast<std::size_t>(n)), 0, 2};
  for (Vertex v = 0; v < n; ++v) cert.weights[v] = (d.x2[v] - d.x2[v + n]) / 2;
  if (!verify_certificate(aux.origin, cert).ok) {
    throw InternalContradiction("weights_from_symmetric: certificate does not define the graph");
  }
  if (mid_weight_set(cert) != aux.mid) {
    throw InternalContradiction("weights_from_symmetric: mid-weight set differs from M");
  }
  return cert;
}

}  // namespace dtg
