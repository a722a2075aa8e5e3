#include <doctest.h>

#include <numeric>
#include <random>

#include "dtg/aux_graph.hpp"
#include "dtg/errors.hpp"
#include "dtg/oracle.hpp"
#include "dtg/recognize.hpp"
#include "support.hpp"

using namespace dtg;
using namespace dtg::patterns;

namespace {

// Two maximum cliques {3,5,6,7} (degree sum 17) and {4,5,6,7} (16).
Graph two_cliques() {
  return Graph::from_edges(8, std::vector<Edge>{{5, 6}, {5, 7}, {6, 7}, {3, 5}, {3, 6}, {3, 7}, {4, 5}, {4, 6}, {4, 7},
                                               {0, 3}, {1, 3}, {1, 4}});
}

std::int64_t degree_sum(const Graph& g, const std::vector<Vertex>& s) {
  std::int64_t d = 0;
  for (Vertex v : s) d += g.degree(v);
  return d;
}

bool symmetric_pair(const AuxGraph& aux, const OrderPair& p) {
  return is_symmetric(aux, p.first) && is_symmetric(aux, p.second) && orders_define_graph(aux.graph, p.first, p.second);
}

// Connected non-bipartite graphs of random certificates.
std::vector<Graph> connected_odd_dtgs(int count, std::uint64_t seed) {
  std::vector<Graph> out;
  std::mt19937_64 rng(seed);
  while (static_cast<int>(out.size()) < count) {
    const Graph g = graph_from_weights(random_certificate(3 + static_cast<Vertex>(rng() % 14), rng()));
    if (components(g).size() == 1 && !bipartition(g)) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("auxiliary_graph") {
  const auto k2 = auxiliary_graph(complete(2), std::vector<Vertex>{0});
  CHECK(k2.graph.edges() == std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}});
  CHECK(k2.bar(0) == 2);
  CHECK(k2.bar(3) == 1);

  const Graph h = house();
  const auto cover = auxiliary_graph(h, std::vector<Vertex>{});
  CHECK(cover.graph.size() == 2 * h.size());
  CHECK(bipartition(cover.graph));

  const std::vector<Vertex> roof{0, 1, 4};
  const auto a = auxiliary_graph(h, roof);
  CHECK(a.graph.size() == 2 * h.size() + 3);
  CHECK(a.mid == roof);
  CHECK_THROWS_AS(auxiliary_graph(h, std::vector<Vertex>{0, 0}), ContractError);
  CHECK_THROWS_AS(auxiliary_graph(h, std::vector<Vertex>{5}), ContractError);
}

TEST_CASE("efficient_max_clique") {
  auto by_orders = [](const Graph& g) {
    const auto o = permutation_orderings(g);
    REQUIRE(o);
    return efficient_max_clique(g, o->first, o->second);
  };
  auto by_orientation = [](const Graph& g) {
    const auto d = transitive_orientation(g);
    REQUIRE(d);
    return efficient_max_clique(g, *d);
  };
  const std::vector<Vertex> all{0, 1, 2, 3};
  CHECK(by_orders(complete(4)) == all);
  CHECK(by_orientation(complete(4)) == all);
  const std::vector<Vertex> tri{0, 1, 2};
  CHECK(by_orders(paw()) == tri);
  CHECK(by_orientation(paw()) == tri);

  const Graph tc = two_cliques();
  CHECK(recognize(tc).verdict == Verdict::accept);
  CHECK(degree_sum(tc, {3, 5, 6, 7}) == 17);
  CHECK(degree_sum(tc, {4, 5, 6, 7}) == 16);
  const std::vector<Vertex> want{4, 5, 6, 7};
  CHECK(by_orders(tc) == want);
  CHECK(by_orientation(tc) == want);
  CHECK(brute_force_efficient_clique(tc) == want);

  CHECK_THROWS_AS(efficient_max_clique(cycle(4), LinearOrder::identity(4), LinearOrder::identity(4)), ContractError);

  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const Vertex n = 1 + static_cast<Vertex>(rng() % 14);
    std::vector<Vertex> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), 0);
    std::shuffle(b.begin(), b.end(), rng);
    const LinearOrder o1(a), o2(b);
    std::vector<Edge> es;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (o2.before(v, u)) es.emplace_back(u, v);
      }
    }
    const Graph g = Graph::from_edges(n, es);
    const auto want_c = brute_force_efficient_clique(g);
    for (const auto& got : {efficient_max_clique(g, o1, o2), by_orientation(g)}) {
      CHECK(is_clique(g, got));
      CHECK(got.size() == want_c.size());
      CHECK(degree_sum(g, got) == degree_sum(g, want_c));
    }
  }
}

TEST_CASE("symmetric_orderings") {
  const auto k3 = auxiliary_graph(complete(3), std::vector<Vertex>{0, 1, 2});
  CHECK(k3.graph.size() == 9);
  const auto p = symmetric_orderings(k3);
  REQUIRE(p);
  CHECK(symmetric_pair(k3, *p));

  const auto bull_aux = auxiliary_graph(bull(), std::vector<Vertex>{0, 1, 2});
  CHECK_FALSE(symmetric_orderings(bull_aux));
  CHECK(test::has_induced_copy(bull_aux.graph, bipartite_net()));

  const auto gem_aux = auxiliary_graph(gem(), brute_force_efficient_clique(gem()));
  CHECK_FALSE(symmetric_orderings(gem_aux));

  for (const auto& g : connected_odd_dtgs(60, 32)) {
    const auto m = brute_force_efficient_clique(g);
    const auto aux = auxiliary_graph(g, m);
    const auto s = symmetric_orderings(aux);
    REQUIRE(s);
    CHECK(symmetric_pair(aux, *s));
  }
}

TEST_CASE("weights_from_symmetric") {
  const auto k3 = auxiliary_graph(complete(3), std::vector<Vertex>{0, 1, 2});
  const auto c = weights_from_symmetric(k3, *symmetric_orderings(k3));
  CHECK(c.lb == 0);
  CHECK(c.ub == 2);
  for (const auto& w : c.weights) {
    CHECK(w >= 0);
    CHECK(w <= 1);
  }
  CHECK(test::defines(complete(3), c));

  for (const auto& g : connected_odd_dtgs(60, 33)) {
    const auto m = brute_force_efficient_clique(g);
    const auto aux = auxiliary_graph(g, m);
    const auto w = weights_from_symmetric(aux, *symmetric_orderings(aux));
    CHECK(test::defines(g, w));
    CHECK(mid_weight_set(w) == m);
  }
}

TEST_CASE("recognize: order five") {
  for (const auto& g : {gem(), bull(), butterfly(), cycle(5)}) {
    const auto r = recognize(g);
    CHECK(r.verdict == Verdict::reject);
    CHECK_FALSE(r.certificate);
    CHECK(r.witness);
    CHECK_FALSE(r.reason.empty());
  }
  CHECK(recognize(gem()).witness->pattern == "gem");
  for (const auto& g : {house(), wheel4(), co_fork(), co_banner(), co_p2_p3()}) {
    const auto r = recognize(g);
    REQUIRE(r.verdict == Verdict::accept);
    CHECK(test::defines(g, *r.certificate));
  }
}

TEST_CASE("recognize: two triangles") {
  const Graph g = two_k3();
  const auto r = recognize(g);
  CHECK(r.verdict == Verdict::reject);
  REQUIRE(r.witness);
  CHECK(r.witness->pattern == "2K3");
  for (std::uint32_t mask = 0; mask + 1 < (1U << 6); ++mask) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < 6; ++v) {
      if ((mask >> v) & 1) s.push_back(v);
    }
    const Graph sub = induced_subgraph(g, s).graph;
    CHECK(recognize(sub).verdict == Verdict::accept);
  }
}

TEST_CASE("recognize: components") {
  const Graph tri_paths = disjoint_union(complete(3), disjoint_union(path(4), star(3)));
  const auto r = recognize(tri_paths);
  REQUIRE(r.verdict == Verdict::accept);
  CHECK(test::defines(tri_paths, *r.certificate));

  CHECK(recognize(disjoint_union(complete(3), bipartite_net())).verdict == Verdict::reject);
  CHECK(recognize(Graph(0)).verdict == Verdict::accept);
  CHECK(recognize(Graph(5)).verdict == Verdict::accept);

  std::mt19937_64 rng(34);
  for (int t = 0; t < 200; ++t) {
    RandomCertificateOptions o;
    o.low = -1 - static_cast<long>(rng() % 4);
    o.high = 3 + static_cast<long>(rng() % 4);
    const Graph g = graph_from_weights(random_certificate(static_cast<Vertex>(rng() % 50), rng(), o));
    const auto res = recognize(g);
    REQUIRE(res.verdict == Verdict::accept);
    CHECK(res.certificate->lb == 0);
    CHECK(res.certificate->ub == 2);
    CHECK(test::defines(g, *res.certificate));
  }
}

TEST_CASE("recognize agrees with brute force up to order 5") {
  for (Vertex n = 1; n <= 5; ++n) {
    for (const auto& g : enumerate_small_graphs(n)) CHECK((recognize(g).verdict == Verdict::accept) == brute_force_dtg(g));
  }
}
