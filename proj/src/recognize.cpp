#include "dtg/recognize.hpp"

#include <algorithm>

#include "dtg/aux_graph.hpp"
#include "dtg/errors.hpp"
#include "dtg/oracle.hpp"
#include "dtg/perm.hpp"

namespace dtg {

namespace {

std::vector<InducedSubgraph> split_components(const Graph& g) {
  std::vector<InducedSubgraph> out;
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  for (auto& comp : components(g)) {
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (local[w] > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), local[w]);
      }
    }
    out.push_back({Graph::from_edges(static_cast<Vertex>(comp.size()), edges), std::move(comp)});
  }
  return out;
}

RecognitionResult rejected(const Graph& g, const RecognizeOptions& options, std::string reason) {
  RecognitionResult r;
  r.verdict = Verdict::reject;
  r.reason = std::move(reason);
  if (g.order() <= options.witness_limit) {
    auto hits = forbidden_scan(g);
    if (!hits.empty()) r.witness = Witness{hits.front().pattern, hits.front().embedding};
  }
  return r;
}

struct Piece {
  const InducedSubgraph* part;
  WeightCertificate cert;
  std::vector<std::uint8_t> side;  // empty for the non-bipartite component
};

}  // namespace

RecognitionResult recognize(const Graph& g, const RecognizeOptions& options) {
  if (g.order() == 0) return {Verdict::accept, WeightCertificate{{}, 0, 2}, std::nullopt, {}};

  const auto parts = split_components(g);
  std::vector<std::optional<Bipartition>> bips;
  std::size_t odd = 0;
  for (const auto& p : parts) {
    bips.push_back(bipartition(p.graph));
    if (!bips.back()) ++odd;
  }
  if (odd >= 2) return rejected(g, options, "two components are not bipartite");

  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Graph& c = parts[i].graph;
    if (bips[i]) {
      Bipartition& bip = *bips[i];
      auto orders = bipartite_permutation_orderings(c, bip);
      if (!orders) return rejected(g, options, "a bipartite component is not a permutation graph");
      if (bip.side[orders->first[0]] != 0) {
        for (auto& s : bip.side) s ^= 1;
        std::swap(bip.x, bip.y);
      }
      const auto diagram = unit_slope_diagram(c, bip, orders->first, orders->second);
      pieces.push_back({&parts[i], bipartite_weights(c, bip, diagram), bip.side});
    } else {
      // Only the clique is needed here; the auxiliary graph test below rejects
      // non-permutation graphs, so the complement is never oriented.
      auto d = transitive_orientation(c);
      if (!d) return rejected(g, options, "the non-bipartite component is not a comparability graph");
      const auto clique = efficient_max_clique(c, *d);
      if (!is_clique(c, clique)) throw InternalContradiction("efficient clique is not a clique");
      const AuxGraph aux = auxiliary_graph(c, clique);
      auto symmetric = symmetric_orderings(aux);
      if (!symmetric) return rejected(g, options, "the auxiliary graph of an efficient maximum clique is not a permutation graph");
      pieces.push_back({&parts[i], weights_from_symmetric(aux, *symmetric), {}});
    }
  }

  // The non-bipartite piece (if any) stays put; the i-th bipartite piece after
  // it moves its X side up and Y side down by i * alpha. Every piece has
  // bounds (0, 2), and alpha separates any two pieces, so every cross pair
  // sums outside [0, 2].
  std::stable_partition(pieces.begin(), pieces.end(), [](const Piece& p) { return p.side.empty(); });
  Rational lo = pieces.front().cert.weights.front();
  Rational hi = lo;
  for (const auto& p : pieces) {
    for (const auto& w : p.cert.weights) {
      lo = std::min(lo, w);
      hi = std::max(hi, w);
    }
  }
  const Rational twice = 2 * std::max(Rational(2 - 2 * lo), Rational(2 * hi));
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), twice.get_num_mpz_t(), twice.get_den_mpz_t());
  Rational alpha(mpz_class(k + 1), mpz_class(2));
  alpha.canonicalize();

  WeightCertificate cert{std::vector<Rational>(static_cast<std::size_t>(g.order())), 0, 2};
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Piece& p = pieces[i];
    const Rational step = alpha * static_cast<long>(i);
    for (std::size_t v = 0; v < p.cert.weights.size(); ++v) {
      const Vertex host = p.part->to_host[v];
      cert.weights[host] = p.side.empty() || p.side[v] == 0 ? Rational(p.cert.weights[v] + step)
                                                             : Rational(p.cert.weights[v] - step);
    }
  }
  if (auto r = verify_certificate(g, cert); !r.ok) {
    throw InternalContradiction("recognize: assembled certificate fails at pair (" +
                                std::to_string(r.failing_pair->first) + ", " +
                                std::to_string(r.failing_pair->second) + ")");
  }
  return {Verdict::accept, std::move(cert), std::nullopt, {}};
}

}  // namespace dtg
