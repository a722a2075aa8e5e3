#pragma once

// Shared helpers for the test binaries. Everything here is written directly
// from definitions and shares no code with the library beyond Graph.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "dtg/certificate.hpp"
#include "dtg/graph.hpp"
#include "dtg/rational.hpp"

namespace dtg::test {

inline Graph random_graph(std::uint64_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(std::clamp(p, 0.0, 1.0));
  std::vector<Edge> es;
  for (Vertex v = 1; v < static_cast<Vertex>(n); ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (coin(rng)) es.emplace_back(u, v);
    }
  }
  return Graph::from_edges(static_cast<Vertex>(n), es);
}

inline bool is_induced_copy(const Graph& host, const Graph& pattern, const std::vector<Vertex>& emb) {
  if (static_cast<Vertex>(emb.size()) != pattern.order()) return false;
  std::vector<Vertex> sorted = emb;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (Vertex i = 0; i < pattern.order(); ++i) {
    for (Vertex j = i + 1; j < pattern.order(); ++j) {
      if (pattern.adjacent(i, j) != host.adjacent(emb[i], emb[j])) return false;
    }
  }
  return true;
}

// Every ordered tuple of distinct host vertices.
inline bool has_induced_copy(const Graph& host, const Graph& pattern) {
  std::vector<Vertex> emb;
  std::vector<char> used(static_cast<std::size_t>(host.order()), 0);
  std::function<bool()> rec = [&]() -> bool {
    if (static_cast<Vertex>(emb.size()) == pattern.order()) return is_induced_copy(host, pattern, emb);
    for (Vertex v = 0; v < host.order(); ++v) {
      if (used[v]) continue;
      used[v] = 1;
      emb.push_back(v);
      if (rec()) return true;
      emb.pop_back();
      used[v] = 0;
    }
    return false;
  };
  return rec();
}

// The definition, one pair at a time.
inline bool defines(const Graph& g, const WeightCertificate& c) {
  if (static_cast<Vertex>(c.weights.size()) != g.order()) return false;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const Rational s = c.weights[u] + c.weights[v];
      if ((c.lb <= s && s <= c.ub) != g.adjacent(u, v)) return false;
    }
  }
  return true;
}

inline Rational q(long num, long den = 1) { return Rational(num, den); }

inline WeightCertificate cert(std::vector<Rational> w, Rational lb, Rational ub) {
  return {std::move(w), std::move(lb), std::move(ub)};
}

}  // namespace dtg::test
