#include <algorithm>
#include <numeric>

#include "dtg/certificate.hpp"
#include "dtg/errors.hpp"

namespace dtg {

namespace {

std::optional<Rational> min_opt(std::optional<Rational> a, const Rational& b) {
  if (!a || b < *a) return b;
  return a;
}

std::optional<Rational> max_opt(std::optional<Rational> a, const Rational& b) {
  if (!a || *a < b) return b;
  return a;
}

// Edgeless graphs: the mid vertex (at most one) goes to the middle, everybody
// else far above ub* with distinct weights.
WeightCertificate spread_edgeless(const WeightCertificate& cert, const Rational& lb_star, const Rational& ub_star) {
  WeightCertificate out{std::vector<Rational>(cert.weights.size()), lb_star, ub_star};
  const auto mid = mid_weight_set(cert);
  const Rational base = abs(lb_star) + abs(ub_star) + 1;
  long next = 0;
  for (std::size_t v = 0; v < cert.weights.size(); ++v) {
    if (!mid.empty() && mid[0] == static_cast<Vertex>(v)) {
      out.weights[v] = (lb_star + ub_star) / 4;
    } else {
      out.weights[v] = base + next++;
    }
  }
  return out;
}

}  // namespace

WeightCertificate normalize_certificate(const WeightCertificate& cert, const Rational& lb_star,
                                        const Rational& ub_star, NormalizationTrace* trace) {
  if (!(lb_star < ub_star)) throw ContractError("normalize_certificate: need lb* < ub*");
  const Graph g = graph_from_weights(cert);
  const auto n = static_cast<Vertex>(cert.weights.size());
  WeightCertificate out;
  if (g.size() == 0) {
    out = spread_edgeless(cert, lb_star, ub_star);
    if (trace) *trace = NormalizationTrace{lb_star, ub_star, {}, 1};
  } else {
    std::vector<Rational> w = cert.weights;
    std::vector<Rational> sorted = w;
    std::sort(sorted.begin(), sorted.end());

    // Move each bound halfway to the nearest sum on its far side; with no sum
    // there, step past every sum instead.
    std::optional<Rational> alpha;
    std::optional<Rational> beta;
    for (const auto& x : w) {
      auto below = std::lower_bound(sorted.begin(), sorted.end(), Rational(cert.lb - x));
      if (below != sorted.begin()) alpha = max_opt(alpha, x + *std::prev(below));
      auto above = std::upper_bound(sorted.begin(), sorted.end(), Rational(cert.ub - x));
      if (above != sorted.end()) beta = min_opt(beta, x + *above);
    }
    const Rational lb_prime = alpha ? Rational((cert.lb + *alpha) / 2) : Rational(2 * sorted.front() - 1);
    const Rational ub_prime = beta ? Rational((cert.ub + *beta) / 2) : Rational(2 * sorted.back() + 1);

    // Separate equal weights: push one member of each tie down by eps/2.
    std::vector<Vertex> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](Vertex a, Vertex b) { return w[a] < w[b]; });
    std::vector<NormalizationParams> steps;
    for (std::size_t i = 1; i < idx.size(); ++i) {
      const Vertex z = idx[i];
      if (cert.weights[z] != cert.weights[idx[i - 1]]) continue;
      NormalizationParams p;
      p.vertex = z;
      for (Vertex v : g.neighbors(z)) p.alpha = min_opt(p.alpha, w[v]);
      for (Vertex v = 0; v < n; ++v) {
        if (w[z] + w[v] > ub_prime) p.beta = min_opt(p.beta, w[v]);
        if (w[v] < w[z]) p.gamma = max_opt(p.gamma, w[v]);
      }
      Rational eps = abs(w[z] - lb_prime / 2);
      eps = std::min(eps, Rational(abs(w[z] - ub_prime / 2)));
      if (p.alpha) eps = std::min(eps, Rational(w[z] + *p.alpha - lb_prime));
      if (p.beta) eps = std::min(eps, Rational(w[z] + *p.beta - ub_prime));
      if (p.gamma) eps = std::min(eps, Rational(w[z] - *p.gamma));
      if (eps <= 0) throw InternalContradiction("normalize_certificate: non-positive perturbation");
      p.epsilon = eps;
      w[z] -= eps / 2;
      steps.push_back(std::move(p));
    }

    const Rational rho = (ub_star - lb_star) / (ub_prime - lb_prime);
    const Rational offset = (rho * lb_prime - lb_star) / 2;
    out = WeightCertificate{std::move(w), lb_star, ub_star};
    for (auto& x : out.weights) x = rho * x - offset;
    if (trace) *trace = NormalizationTrace{lb_prime, ub_prime, std::move(steps), rho};
  }
  if (!verify_certificate(g, out).ok || mid_weight_set(out) != mid_weight_set(cert) || !is_normalized(out)) {
    throw InternalContradiction("normalize_certificate: result breaks the contract");
  }
  return out;
}

}  // namespace dtg
