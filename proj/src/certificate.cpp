#include "dtg/certificate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "dtg/errors.hpp"
#include "json.hpp"

namespace dtg {

namespace {

// The certificate over a common denominator, when every scaled value stays
// below 2^61 in magnitude (so any sum fits in int64).
struct IntCertificate {
  std::vector<std::int64_t> w;
  std::int64_t lb = 0;
  std::int64_t ub = 0;
};

std::optional<IntCertificate> to_integers(const WeightCertificate& c) {
  const mpz_class limit = mpz_class(1) << 61;
  mpz_class den = 1;
  auto absorb = [&](const Rational& r) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den().get_mpz_t());
    return den < limit;
  };
  if (!absorb(c.lb) || !absorb(c.ub)) return std::nullopt;
  for (const auto& x : c.weights) {
    if (!absorb(x)) return std::nullopt;
  }
  auto scaled = [&](const Rational& r, std::int64_t& out) {
    mpz_class v = r.get_num() * (den / r.get_den());
    if (abs(v) >= limit) return false;
    out = v.get_si();
    return true;
  };
  IntCertificate out;
  out.w.resize(c.weights.size());
  if (!scaled(c.lb, out.lb) || !scaled(c.ub, out.ub)) return std::nullopt;
  for (std::size_t i = 0; i < c.weights.size(); ++i) {
    if (!scaled(c.weights[i], out.w[i])) return std::nullopt;
  }
  return out;
}

template <class T>
std::vector<Vertex> by_weight(const std::vector<T>& w) {
  std::vector<Vertex> idx(w.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](Vertex a, Vertex b) { return w[a] < w[b] || (w[a] == w[b] && a < b); });
  return idx;
}

// Edges uv with lo <= w(u) + w(v) <= hi; a missing bound is unbounded.
template <class T>
Graph graph_in_range(const std::vector<T>& w, const std::optional<T>& lo, const std::optional<T>& hi) {
  const auto n = static_cast<Vertex>(w.size());
  auto idx = by_weight(w);
  std::vector<T> sorted(w.size());
  for (std::size_t i = 0; i < idx.size(); ++i) sorted[i] = w[idx[i]];
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    auto first = lo ? std::lower_bound(sorted.begin(), sorted.end(), T(*lo - w[u])) : sorted.begin();
    auto last = hi ? std::upper_bound(sorted.begin(), sorted.end(), T(*hi - w[u])) : sorted.end();
    for (auto it = first; it < last; ++it) {
      const Vertex v = idx[it - sorted.begin()];
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

template <class T>
VerifyResult verify_sorted(const Graph& g, const std::vector<T>& w, const T& lb, const T& ub) {
  const Vertex n = g.order();
  auto idx = by_weight(w);
  std::vector<T> sorted(w.size());
  for (std::size_t i = 0; i < idx.size(); ++i) sorted[i] = w[idx[i]];
  auto in_range = [&](const T& s) { return !(s < lb) && !(ub < s); };
  Vertex bad = -1;
  for (Vertex u = 0; u < n && bad < 0; ++u) {
    const T lo = lb - w[u];
    const T hi = ub - w[u];
    std::int64_t count = 0;
    if (!(hi < lo)) {
      count = std::upper_bound(sorted.begin(), sorted.end(), hi) - std::lower_bound(sorted.begin(), sorted.end(), lo);
    }
    if (in_range(T(w[u] + w[u]))) --count;
    bool ok = count == g.degree(u);
    for (auto it = g.neighbors(u).begin(); ok && it != g.neighbors(u).end(); ++it) ok = in_range(T(w[u] + w[*it]));
    if (!ok) bad = u;
  }
  if (bad < 0) return {};
  // No smaller vertex fails, so the partner of `bad` is larger.
  for (Vertex v = bad + 1; v < n; ++v) {
    if (in_range(T(w[bad] + w[v])) != g.adjacent(bad, v)) return {false, Edge{bad, v}};
  }
  throw InternalContradiction("verify_certificate: failing vertex without failing pair");
}

void check_cover(const Graph& g, const WeightCertificate& cert) {
  if (cert.weights.size() != static_cast<std::size_t>(g.order())) {
    throw ContractError("certificate has " + std::to_string(cert.weights.size()) + " weights for a graph on " +
                        std::to_string(g.order()) + " vertices");
  }
}

}  // namespace

Graph graph_from_weights(const WeightCertificate& cert) {
  if (auto ic = to_integers(cert)) {
    return graph_in_range<std::int64_t>(ic->w, ic->lb, ic->ub);
  }
  return graph_in_range<Rational>(cert.weights, cert.lb, cert.ub);
}

VerifyResult verify_certificate(const Graph& g, const WeightCertificate& cert) {
  check_cover(g, cert);
  if (auto ic = to_integers(cert)) return verify_sorted(g, ic->w, ic->lb, ic->ub);
  return verify_sorted(g, cert.weights, cert.lb, cert.ub);
}

VerifyResult verify_certificate_pairwise(const Graph& g, const WeightCertificate& cert) {
  check_cover(g, cert);
  const auto& w = cert.weights;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const Rational s = w[u] + w[v];
      if ((cert.lb <= s && s <= cert.ub) != g.adjacent(u, v)) return {false, Edge{u, v}};
    }
  }
  return {};
}

std::vector<Vertex> mid_weight_set(const WeightCertificate& cert) {
  std::vector<Vertex> m;
  for (std::size_t v = 0; v < cert.weights.size(); ++v) {
    const Rational twice = 2 * cert.weights[v];
    if (cert.lb <= twice && twice <= cert.ub) m.push_back(static_cast<Vertex>(v));
  }
  return m;
}

bool is_normalized(const WeightCertificate& cert) {
  std::vector<Rational> sorted = cert.weights;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (const auto& x : sorted) {
    if (std::binary_search(sorted.begin(), sorted.end(), Rational(cert.lb - x)) ||
        std::binary_search(sorted.begin(), sorted.end(), Rational(cert.ub - x))) {
      return false;
    }
  }
  return true;
}

PermutationDiagram diagram_from_weights(const WeightCertificate& cert) {
  if (!is_normalized(cert)) throw ContractError("diagram_from_weights: certificate is not normalized");
  PermutationDiagram d;
  d.x1.reserve(cert.weights.size());
  d.x2.reserve(cert.weights.size());
  for (const auto& w : cert.weights) {
    d.x1.push_back(std::max(w, Rational(cert.ub - w)));
    d.x2.push_back(std::max(w, Rational(cert.lb - w)));
  }
  return d;
}

WeightCertificate bipartite_weights(const Graph& g, const Bipartition& bip, const PermutationDiagram& d) {
  const auto n = static_cast<std::size_t>(g.order());
  if (d.x1.size() != n || d.x2.size() != n || bip.side.size() != n) {
    throw ContractError("bipartite_weights: size mismatch");
  }
  WeightCertificate cert{{}, 0, 2};
  if (n == 0) return cert;
  for (std::size_t v = 0; v < n; ++v) {
    if (d.x2[v] != d.x1[v] + (bip.side[v] == 0 ? 1 : -1)) {
      throw ContractError("bipartite_weights: diagram is not unit-slope at vertex " + std::to_string(v));
    }
  }
  const Rational shift = 2 - *std::min_element(d.x1.begin(), d.x1.end());
  cert.weights.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    cert.weights[v] = d.x1[v] + shift;
    if (bip.side[v] == 0) cert.weights[v] = -cert.weights[v];
  }
  if (auto r = verify_certificate(g, cert); !r.ok) {
    throw InternalContradiction("bipartite_weights: certificate fails at pair (" +
                                std::to_string(r.failing_pair->first) + ", " +
                                std::to_string(r.failing_pair->second) + ")");
  }
  return cert;
}

std::pair<Graph, Graph> co_threshold_split(const WeightCertificate& cert) {
  if (auto ic = to_integers(cert)) {
    return {graph_in_range<std::int64_t>(ic->w, ic->lb, std::nullopt),
            graph_in_range<std::int64_t>(ic->w, std::nullopt, ic->ub)};
  }
  return {graph_in_range<Rational>(cert.weights, cert.lb, std::nullopt),
          graph_in_range<Rational>(cert.weights, std::nullopt, cert.ub)};
}

WeightCertificate compose_disjoint(const WeightCertificate& cert_g, const WeightCertificate& cert_h,
                                   const Bipartition& bip_h) {
  if (cert_g.lb != cert_h.lb || cert_g.ub != cert_h.ub) {
    throw ContractError("compose_disjoint: certificates must share their bounds");
  }
  if (bip_h.side.size() != cert_h.weights.size()) throw ContractError("compose_disjoint: bipartition size mismatch");
  const Rational& lb = cert_g.lb;
  const Rational& ub = cert_g.ub;
  WeightCertificate out{cert_g.weights, lb, ub};
  Rational alpha = 0;
  if (!cert_g.weights.empty() || !cert_h.weights.empty()) {
    std::vector<Rational> all = cert_g.weights;
    all.insert(all.end(), cert_h.weights.begin(), cert_h.weights.end());
    auto [lo, hi] = std::minmax_element(all.begin(), all.end());
    const Rational bound = std::max(Rational(ub - 2 * *lo), Rational(2 * *hi - lb));
    const Rational twice = 2 * bound;
    mpz_class k;
    mpz_fdiv_q(k.get_mpz_t(), twice.get_num_mpz_t(), twice.get_den_mpz_t());
    alpha = std::max(Rational(0), Rational(mpz_class(k + 1), mpz_class(2)));
    alpha.canonicalize();
  }
  for (std::size_t v = 0; v < cert_h.weights.size(); ++v) {
    out.weights.push_back(bip_h.side[v] == 0 ? Rational(cert_h.weights[v] + alpha)
                                              : Rational(cert_h.weights[v] - alpha));
  }
  const Graph target = disjoint_union(graph_from_weights(cert_g), graph_from_weights(cert_h));
  if (!verify_certificate(target, out).ok) throw InternalContradiction("compose_disjoint: composition fails");
  return out;
}

StarPcg to_star_pcg(const WeightCertificate& cert) { return {cert.weights, cert.lb, cert.ub}; }

WeightCertificate from_star_pcg(const StarPcg& star) { return {star.leaf_weights, star.lb, star.ub}; }

std::string certificate_to_json(const WeightCertificate& cert, int indent) {
  nlohmann::ordered_json j;
  j["weights"] = nlohmann::ordered_json::object();
  for (std::size_t v = 0; v < cert.weights.size(); ++v) j["weights"][std::to_string(v)] = to_string(cert.weights[v]);
  j["lb"] = to_string(cert.lb);
  j["ub"] = to_string(cert.ub);
  return j.dump(indent);
}

WeightCertificate certificate_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("certificate: ") + e.what());
  }
  auto rational_field = [](const nlohmann::json& x, const std::string& what) {
    if (!x.is_string()) throw ParseError(0, "certificate: " + what + " must be a \"p/q\" string");
    return parse_rational(x.get<std::string>());
  };
  if (!j.is_object() || !j.contains("weights") || !j.contains("lb") || !j.contains("ub") || !j["weights"].is_object()) {
    throw ParseError(0, "certificate: expected an object with weights, lb, ub");
  }
  WeightCertificate cert;
  const auto& weights = j["weights"];
  cert.weights.resize(weights.size());
  std::vector<char> seen(weights.size(), 0);
  for (auto it = weights.begin(); it != weights.end(); ++it) {
    const std::string& key = it.key();
    std::size_t v = 0;
    if (key.empty() || key.size() > 9 || !std::all_of(key.begin(), key.end(), ::isdigit) ||
        (v = std::stoul(key)) >= weights.size() || seen[v]) {
      throw ParseError(0, "certificate: weight keys must be the vertices 0..n-1");
    }
    seen[v] = 1;
    cert.weights[v] = rational_field(it.value(), "weight of " + key);
  }
  cert.lb = rational_field(j["lb"], "lb");
  cert.ub = rational_field(j["ub"], "ub");
  return cert;
}

}  // namespace dtg
