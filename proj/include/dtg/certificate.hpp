#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dtg/graph.hpp"
#include "dtg/perm.hpp"
#include "dtg/rational.hpp"

namespace dtg {

/// uv is an edge iff lb <= w(u) + w(v) <= ub.
struct WeightCertificate {
  std::vector<Rational> weights;
  Rational lb;
  Rational ub;

  friend bool operator==(const WeightCertificate&, const WeightCertificate&) = default;
};

struct VerifyResult {
  bool ok = true;
  /// Lexicographically smallest pair (u < v) on which graph and certificate
  /// disagree.
  std::optional<Edge> failing_pair;
};

Graph graph_from_weights(const WeightCertificate& cert);

/// Sorted-weight range counting, O((n + m) log n); integer arithmetic when the
/// certificate fits a common 62-bit denominator. ContractError when the
/// certificate does not cover exactly V(g).
VerifyResult verify_certificate(const Graph& g, const WeightCertificate& cert);

/// Plain O(n^2) scan of every pair. Reference for verify_certificate.
VerifyResult verify_certificate_pairwise(const Graph& g, const WeightCertificate& cert);

/// M = {v | lb <= 2 w(v) <= ub}, ascending.
std::vector<Vertex> mid_weight_set(const WeightCertificate& cert);

/// Weights pairwise distinct and no sum w(u) + w(v), u = v included, equal to
/// lb or ub.
bool is_normalized(const WeightCertificate& cert);

/// x1 = max(w, ub - w), x2 = max(w, lb - w). ContractError unless normalized.
PermutationDiagram diagram_from_weights(const WeightCertificate& cert);

/// From a unit-slope diagram (x2 = x1 + 1 on X, x1 - 1 on Y). Coordinates are
/// shifted so that min x1 = 2, then w = -x1 on X and w = x1 on Y with bounds
/// (0, 2). Throws InternalContradiction if the result does not certify g.
WeightCertificate bipartite_weights(const Graph& g, const Bipartition& bip, const PermutationDiagram& d);

/// One perturbation step of normalize_certificate. nullopt stands for an
/// infinite term (the set it ranges over is empty).
struct NormalizationParams {
  Vertex vertex = -1;
  std::optional<Rational> alpha;
  std::optional<Rational> beta;
  std::optional<Rational> gamma;
  Rational epsilon;
};

struct NormalizationTrace {
  Rational lb_prime;
  Rational ub_prime;
  std::vector<NormalizationParams> steps;
  Rational rho;
};

/// Same graph and mid-weight set, bounds exactly (lb_star, ub_star), distinct
/// weights, no sum on a bound. ContractError unless lb_star < ub_star.
WeightCertificate normalize_certificate(const WeightCertificate& cert, const Rational& lb_star,
                                        const Rational& ub_star, NormalizationTrace* trace = nullptr);

/// G1: sum >= lb, G2: sum <= ub. Both are threshold graphs and E(G1) n E(G2) = E.
std::pair<Graph, Graph> co_threshold_split(const WeightCertificate& cert);

/// Certificate of the disjoint union, H's vertices numbered after G's. H's X
/// side moves up by alpha and its Y side down by alpha, alpha the least
/// multiple of 1/2 that separates every cross pair. Both inputs must share
/// their bounds.
WeightCertificate compose_disjoint(const WeightCertificate& cert_g, const WeightCertificate& cert_h,
                                   const Bipartition& bip_h);

/// Star with center c and one leaf per vertex; leaf_weights[v] is the weight
/// of edge vc. Leaves are adjacent iff their path length is within [lb, ub].
struct StarPcg {
  std::vector<Rational> leaf_weights;
  Rational lb;
  Rational ub;
};

StarPcg to_star_pcg(const WeightCertificate& cert);
WeightCertificate from_star_pcg(const StarPcg& star);

/// {"weights": {"0": "p/q", ...}, "lb": "p/q", "ub": "p/q"}, keys in vertex order.
std::string certificate_to_json(const WeightCertificate& cert, int indent = 2);
WeightCertificate certificate_from_json(std::string_view text);

}  // namespace dtg
