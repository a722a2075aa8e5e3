#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dtg/errors.hpp"
#include "dtg/graph.hpp"
#include "dtg/oracle.hpp"
#include "dtg/perm.hpp"
#include "support.hpp"

using namespace dtg;
using namespace dtg::patterns;
using test::q;

namespace {

LinearOrder random_order(Vertex n, std::mt19937_64& rng) {
  std::vector<Vertex> s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 0);
  std::shuffle(s.begin(), s.end(), rng);
  return LinearOrder(s);
}

// Graph defined by two orders, by comparing every pair.
Graph graph_of_orders(const LinearOrder& a, const LinearOrder& b) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < a.size(); ++u) {
    for (Vertex v = u + 1; v < a.size(); ++v) {
      if (a.before(u, v) != b.before(u, v)) es.emplace_back(u, v);
    }
  }
  return Graph::from_edges(a.size(), es);
}

bool transitive(const Graph& g, const Orientation& d) {
  if (static_cast<std::int64_t>(d.arcs.size()) != g.size()) return false;
  const Vertex n = g.order();
  std::vector<std::vector<char>> arc(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (auto [u, v] : d.arcs) {
    if (!g.adjacent(u, v) || arc[v][u]) return false;
    arc[u][v] = 1;
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (!arc[a][b]) continue;
      for (Vertex c = 0; c < n; ++c) {
        if (arc[b][c] && !arc[a][c]) return false;
      }
    }
  }
  return true;
}

// Unit interval bigraph: sides alternate by index parity, starts in eighths,
// x ~ y iff |start(x) - start(y)| <= 8.
Graph unit_interval_bigraph(Vertex n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> start(static_cast<std::size_t>(n));
  for (auto& s : start) s = static_cast<int>(rng() % (4 * static_cast<std::uint64_t>(n) + 8));
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if ((u + v) % 2 == 1 && std::abs(start[u] - start[v]) <= 8) es.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, es);
}

Bipartition flipped_to(const Bipartition& b, Vertex first) {
  Bipartition r = b;
  if (r.side[first] != 0) {
    for (auto& s : r.side) s ^= 1;
    std::swap(r.x, r.y);
  }
  return r;
}

}  // namespace

TEST_CASE("LinearOrder") {
  const LinearOrder o(std::vector<Vertex>{2, 0, 1});
  CHECK(o.position(2) == 0);
  CHECK(o.before(0, 1));
  CHECK(o.reversed().sequence() == std::vector<Vertex>{1, 0, 2});
  CHECK_THROWS_AS(LinearOrder(std::vector<Vertex>{0, 0}), ContractError);
  CHECK_THROWS_AS(LinearOrder(std::vector<Vertex>{0, 2}), ContractError);
}

TEST_CASE("forced_partner_order") {
  std::mt19937_64 rng(1);
  const LinearOrder o = random_order(6, rng);
  const auto e = forced_partner_order(Graph(6), o);
  REQUIRE(e);
  CHECK(*e == o);
  const auto k = forced_partner_order(complete(6), o);
  REQUIRE(k);
  CHECK(*k == o.reversed());

  std::vector<Vertex> s{0, 1, 2, 3, 4};
  int accepted = 0;
  do {
    accepted += forced_partner_order(cycle(5), LinearOrder(s)).has_value();
  } while (std::next_permutation(s.begin(), s.end()));
  CHECK(accepted == 0);

  // Random order pairs: the partner of o1 in the graph they define is o2.
  for (int t = 0; t < 200; ++t) {
    const Vertex n = 1 + static_cast<Vertex>(rng() % 30);
    const LinearOrder a = random_order(n, rng);
    const LinearOrder b = random_order(n, rng);
    const Graph g = graph_of_orders(a, b);
    const auto p = forced_partner_order(g, a);
    REQUIRE(p);
    CHECK(*p == b);
    CHECK(orders_define_graph(g, a, b));
    CHECK(orders_define_graph(g, a.reversed(), b.reversed()));
    if (g.size() > 0) CHECK_FALSE(orders_define_graph(g, a, a));
  }
}

TEST_CASE("transitive_orientation") {
  const auto p3 = transitive_orientation(path(3));
  REQUIRE(p3);
  CHECK(transitive(path(3), *p3));
  CHECK_FALSE(transitive_orientation(cycle(5)));

  // C5: none of the 32 orientations is transitive.
  const auto c5 = cycle(5).edges();
  for (int mask = 0; mask < 32; ++mask) {
    Orientation d;
    for (int i = 0; i < 5; ++i) {
      auto [u, v] = c5[i];
      d.arcs.push_back((mask >> i) & 1 ? Edge{v, u} : Edge{u, v});
    }
    CHECK_FALSE(transitive(cycle(5), d));
  }

  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const Graph g = unit_interval_bigraph(2 + static_cast<Vertex>(rng() % 30), rng());
    const auto d = transitive_orientation(g);
    REQUIRE(d);
    CHECK(transitive(g, *d));
  }

  // Comparability graphs are exactly the graphs with a transitive orientation;
  // check by exhaustive orientation search on small graphs.
  for (Vertex n = 1; n <= 5; ++n) {
    for (const auto& g : enumerate_small_graphs(n)) {
      const auto es = g.edges();
      bool any = false;
      for (std::uint32_t mask = 0; mask < (1U << es.size()) && !any; ++mask) {
        Orientation d;
        for (std::size_t i = 0; i < es.size(); ++i) {
          d.arcs.push_back((mask >> i) & 1 ? Edge{es[i].second, es[i].first} : es[i]);
        }
        any = transitive(g, d);
      }
      const auto got = transitive_orientation(g);
      CHECK(got.has_value() == any);
      if (got) CHECK(transitive(g, *got));
    }
  }
}

TEST_CASE("permutation_orderings") {
  const auto c4 = permutation_orderings(cycle(4));
  REQUIRE(c4);
  CHECK(forced_partner_order(cycle(4), c4->first) == c4->second);
  CHECK_FALSE(permutation_orderings(cycle(5)));
  CHECK_FALSE(permutation_orderings(bipartite_net()));
  CHECK_FALSE(permutation_orderings(bipartite_tent()));
  CHECK(permutation_orderings(Graph(0)));

  for (Vertex n = 1; n <= 6; ++n) {
    for (const auto& g : enumerate_small_graphs(n)) {
      const auto got = permutation_orderings(g);
      CHECK(got.has_value() == brute_force_permutation(g).has_value());
      if (got) {
        CHECK(orders_define_graph(g, got->first, got->second));
        CHECK(graph_from_diagram(diagram_from_orderings(got->first, got->second)) == g);
      }
    }
  }

  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const Vertex n = 1 + static_cast<Vertex>(rng() % 60);
    const Graph g = graph_of_orders(random_order(n, rng), random_order(n, rng));
    const auto got = permutation_orderings(g);
    REQUIRE(got);
    CHECK(orders_define_graph(g, got->first, got->second));
  }
  CHECK_THROWS_AS(permutation_orderings(Graph(kMaxGeneralOrder + 1)), ContractError);
}

TEST_CASE("bipartite_permutation_orderings") {
  auto run = [](const Graph& g) {
    const auto bip = bipartition(g);
    REQUIRE(bip);
    return bipartite_permutation_orderings(g, *bip);
  };
  CHECK(run(path(4)));
  CHECK(run(star(5)));
  CHECK_FALSE(run(bipartite_net()));
  CHECK_FALSE(run(bipartite_tent()));
  CHECK_FALSE(run(disjoint_union(path(3), bipartite_net())));
  CHECK(run(disjoint_union(path(3), cycle(4))));

  for (Vertex n = 1; n <= 6; ++n) {
    for (const auto& g : enumerate_small_graphs(n)) {
      const auto bip = bipartition(g);
      if (!bip) continue;
      const auto got = bipartite_permutation_orderings(g, *bip);
      CHECK(got.has_value() == brute_force_permutation(g).has_value());
      if (got) CHECK(orders_define_graph(g, got->first, got->second));
    }
  }
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    const Graph g = unit_interval_bigraph(1 + static_cast<Vertex>(rng() % 60), rng());
    const auto got = run(g);
    REQUIRE(got);
    CHECK(orders_define_graph(g, got->first, got->second));
  }
}

TEST_CASE("diagrams") {
  const LinearOrder id = LinearOrder::identity(4);
  const auto d = diagram_from_orderings(id, id);
  for (Vertex v = 0; v < 4; ++v) {
    CHECK(d.x1[v] == v);
    CHECK(d.x2[v] == v);
  }
  const auto r = diagram_from_orderings(id, id.reversed());
  for (Vertex v = 0; v < 4; ++v) CHECK(r.x2[v] == 3 - v);
  CHECK(graph_from_diagram(d) == Graph(4));
  CHECK(graph_from_diagram(r) == complete(4));

  // Five segments with fractional coordinates.
  PermutationDiagram five{{q(0), q(1, 2), q(1), q(3, 2), q(2)}, {q(2), q(0), q(4), q(1), q(3)}};
  CHECK(graph_from_diagram(five) == Graph::from_edges(5, std::vector<Edge>{{0, 1}, {0, 3}, {2, 3}, {2, 4}}));
  CHECK(diagram_represents(graph_from_diagram(five), five));
  CHECK_FALSE(diagram_represents(complete(5), five));

  PermutationDiagram dup{{q(0), q(0)}, {q(0), q(1)}};
  CHECK_THROWS_AS(graph_from_diagram(dup), ContractError);

  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const Vertex n = 1 + static_cast<Vertex>(rng() % 25);
    const LinearOrder a = random_order(n, rng);
    const LinearOrder b = random_order(n, rng);
    CHECK(graph_from_diagram(diagram_from_orderings(a, b)) == graph_of_orders(a, b));
  }

  const auto back = parse_diagram(format_diagram(five));
  CHECK(back.x1 == five.x1);
  CHECK(back.x2 == five.x2);
}

TEST_CASE("unit_slope_diagram") {
  const Graph k2 = complete(2);
  Bipartition bip = *bipartition(k2);
  const LinearOrder o1(std::vector<Vertex>{0, 1});
  const LinearOrder o2(std::vector<Vertex>{1, 0});
  const auto d = unit_slope_diagram(k2, bip, o1, o2);
  CHECK(d.x2[0] == d.x1[0] + 1);
  CHECK(d.x2[1] == d.x1[1] - 1);
  CHECK(d.x1[0] < d.x1[1]);
  CHECK(d.x2[0] > d.x2[1]);
  CHECK(graph_from_diagram(d) == k2);

  std::swap(bip.x, bip.y);
  for (auto& s : bip.side) s ^= 1;
  CHECK_THROWS_AS(unit_slope_diagram(k2, bip, o1, o2), InternalContradiction);

  // Every component of random unit interval bigraphs.
  std::mt19937_64 rng(6);
  for (int t = 0; t < 200; ++t) {
    const Graph g = unit_interval_bigraph(1 + static_cast<Vertex>(rng() % 40), rng());
    for (const auto& comp : components(g)) {
      const auto sub = induced_subgraph(g, comp).graph;
      const auto b0 = bipartition(sub);
      REQUIRE(b0);
      const auto orders = bipartite_permutation_orderings(sub, *b0);
      REQUIRE(orders);
      const Bipartition b = flipped_to(*b0, orders->first[0]);
      const auto u = unit_slope_diagram(sub, b, orders->first, orders->second);
      for (Vertex v = 0; v < sub.order(); ++v) CHECK(u.x2[v] == u.x1[v] + (b.side[v] == 0 ? 1 : -1));
      CHECK(graph_from_diagram(u) == sub);
    }
  }
}

TEST_CASE("neighborhood equivalence") {
  const Graph c4 = cycle(4);
  const LinearOrder a(std::vector<Vertex>{0, 1, 2, 3});
  CHECK(neighborhood_equivalent(c4, a, a));
  CHECK(neighborhood_equivalent(c4, a, LinearOrder(std::vector<Vertex>{2, 1, 0, 3})));
  CHECK_FALSE(neighborhood_equivalent(c4, a, LinearOrder(std::vector<Vertex>{1, 2, 3, 0})));

  // Connected bipartite permutation graphs: every order with a valid partner
  // matches one of the four variants of the computed pair.
  for (Vertex n = 2; n <= 7; ++n) {
    for (const auto& g : enumerate_small_graphs(n)) {
      if (components(g).size() != 1) continue;
      const auto bip = bipartition(g);
      if (!bip) continue;
      const auto got = bipartite_permutation_orderings(g, *bip);
      if (!got) continue;
      const std::vector<LinearOrder> variants{got->first, got->second, got->first.reversed(),
                                              got->second.reversed()};
      std::vector<Vertex> s(static_cast<std::size_t>(n));
      std::iota(s.begin(), s.end(), 0);
      do {
        const LinearOrder o(s);
        if (!forced_partner_order(g, o)) continue;
        const bool matched = std::any_of(variants.begin(), variants.end(),
                                         [&](const LinearOrder& v) { return neighborhood_equivalent(g, o, v); });
        CHECK(matched);
      } while (std::next_permutation(s.begin(), s.end()));
    }
  }
}
