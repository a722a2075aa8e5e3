#include <algorithm>

#include "dtg/errors.hpp"
#include "dtg/perm.hpp"

namespace dtg {

// Work in units of eps = 1/(2n): t = 2n * x1. Consecutive vertices of o1 need
// t to grow by at least 1; consecutive a, b of o2 need
//   t(b) >= t(a) + 1 + 2n (delta(a) - delta(b)),  delta = +1 on X, -1 on Y.
// The least non-negative solution is found by label-correcting sweeps in o1
// order. Forward arcs settle within a sweep, so the number of sweeps is one
// more than the longest run of backward arcs on a critical path.
PermutationDiagram unit_slope_diagram(const Graph& g, const Bipartition& bip, const LinearOrder& o1,
                                      const LinearOrder& o2) {
  const Vertex n = g.order();
  if (o1.size() != n || o2.size() != n || bip.side.size() != static_cast<std::size_t>(n)) {
    throw ContractError("unit_slope_diagram: size mismatch");
  }
  PermutationDiagram d;
  if (n == 0) return d;
  if (bip.side[o1[0]] != 0) throw InternalContradiction("unit_slope_diagram: first vertex of o1 is not in X");

  const std::int64_t scale = 2 * static_cast<std::int64_t>(n);
  auto delta = [&](Vertex v) -> std::int64_t { return bip.side[v] == 0 ? 1 : -1; };
  struct Arc {
    Vertex to = -1;
    std::int64_t weight = 0;
  };
  std::vector<Arc> next1(static_cast<std::size_t>(n));
  std::vector<Arc> next2(static_cast<std::size_t>(n));
  for (Vertex i = 0; i + 1 < n; ++i) {
    next1[o1[i]] = {o1[i + 1], 1};
    const Vertex a = o2[i];
    const Vertex b = o2[i + 1];
    next2[a] = {b, 1 + scale * (delta(a) - delta(b))};
  }

  std::vector<std::int64_t> t(static_cast<std::size_t>(n), 0);
  bool changed = true;
  for (Vertex round = 0; changed; ++round) {
    if (round > n) throw InternalContradiction("unit_slope_diagram: constraint system is infeasible");
    changed = false;
    for (Vertex v : o1.sequence()) {
      for (const Arc& arc : {next1[v], next2[v]}) {
        if (arc.to >= 0 && t[v] + arc.weight > t[arc.to]) {
          t[arc.to] = t[v] + arc.weight;
          changed = true;
        }
      }
    }
  }

  for (Vertex i = 0; i + 1 < n; ++i) {
    const Vertex a = o2[i];
    const Vertex b = o2[i + 1];
    if (t[o1[i]] >= t[o1[i + 1]] || t[a] + scale * delta(a) >= t[b] + scale * delta(b)) {
      throw InternalContradiction("unit_slope_diagram: solution violates the orders");
    }
  }
  if (!orders_define_graph(g, o1, o2)) {
    throw InternalContradiction("unit_slope_diagram: the orders do not define the graph");
  }

  d.x1.resize(static_cast<std::size_t>(n));
  d.x2.resize(static_cast<std::size_t>(n));
  const mpz_class den(scale);
  for (Vertex v = 0; v < n; ++v) {
    d.x1[v] = Rational(mpz_class(static_cast<long>(t[v])), den);
    d.x1[v].canonicalize();
    d.x2[v] = d.x1[v] + delta(v);
  }
  return d;
}

}  // namespace dtg
