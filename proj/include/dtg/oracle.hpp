#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dtg/certificate.hpp"
#include "dtg/graph.hpp"
#include "dtg/perm.hpp"

namespace dtg {

/// First o1 (lexicographic over all n! orders) with a valid forced partner.
/// ContractError when n > 8.
std::optional<OrderPair> brute_force_permutation(const Graph& g);

/// Exhaustive decision, n <= 6. Components: at most one non-bipartite, each
/// bipartite one a permutation graph. A connected non-bipartite graph is
/// accepted iff for some clique M some symmetric order of the pairs
/// {v, v-bar} has a symmetric forced partner in the auxiliary graph.
bool brute_force_dtg(const Graph& g);

/// Over all vertex subsets (n <= 16): maximum clique, then least degree sum,
/// then lexicographically smallest.
std::vector<Vertex> brute_force_efficient_clique(const Graph& g);

/// Upper-triangle adjacency bits (row-major, bit 0 = pair (0,1)) minimized
/// over all relabelings that list vertices by non-increasing degree. n <= 8.
using CanonicalForm = std::uint64_t;
CanonicalForm canonical_form(const Graph& g);

/// One graph per isomorphism class, in increasing canonical form. n <= 7.
std::vector<Graph> enumerate_small_graphs(Vertex n);

struct ForbiddenHit {
  std::string pattern;
  std::vector<Vertex> embedding;
};

/// First induced copy of each of C5, bull, butterfly, gem, 2K3, in that order.
std::vector<ForbiddenHit> forbidden_scan(const Graph& g);

struct RandomCertificateOptions {
  /// Weights are distinct multiples of 1/denominator in [low, high];
  /// denominator 0 picks max(4, 2n).
  Rational low = -1;
  Rational high = 3;
  long denominator = 0;
};

/// Deterministic for a given (n, seed, options). Bounds are (0, 2).
WeightCertificate random_certificate(Vertex n, std::uint64_t seed, const RandomCertificateOptions& options = {});

}  // namespace dtg
