#include "dtg/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <unordered_set>

#include "dtg/errors.hpp"

namespace dtg {

std::optional<OrderPair> brute_force_permutation(const Graph& g) {
  if (g.order() > 8) throw ContractError("brute_force_permutation: n > 8");
  std::vector<Vertex> seq(static_cast<std::size_t>(g.order()));
  std::iota(seq.begin(), seq.end(), 0);
  do {
    LinearOrder o1(seq);
    if (auto o2 = forced_partner_order(g, o1)) return OrderPair{std::move(o1), std::move(*o2)};
  } while (std::next_permutation(seq.begin(), seq.end()));
  return std::nullopt;
}

namespace {

bool symmetric_pairs(const LinearOrder& o, Vertex k) {
  const Vertex size = 2 * k;
  for (Vertex i = 0; i < size; ++i) {
    const Vertex b = o[size - 1 - i];
    if (o[i] != (b < k ? b + k : b - k)) return false;
  }
  return true;
}

bool connected_dtg(const Graph& c) {
  const Vertex k = c.order();
  for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
    std::vector<Vertex> m;
    for (Vertex v = 0; v < k; ++v) {
      if (mask >> v & 1U) m.push_back(v);
    }
    if (!is_clique(c, m)) continue;
    std::vector<Edge> edges;
    for (auto [u, v] : c.edges()) {
      edges.emplace_back(u, v + k);
      edges.emplace_back(v, u + k);
    }
    for (Vertex v : m) edges.emplace_back(v, v + k);
    const Graph aux = Graph::from_edges(2 * k, edges);

    std::vector<Vertex> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Vertex> seq(static_cast<std::size_t>(2 * k));
    do {
      for (std::uint32_t flip = 0; flip < (1U << k); ++flip) {
        for (Vertex i = 0; i < k; ++i) {
          const Vertex x = (flip >> i & 1U) ? perm[i] + k : perm[i];
          seq[i] = x;
          seq[2 * k - 1 - i] = x < k ? x + k : x - k;
        }
        auto partner = forced_partner_order(aux, LinearOrder(seq));
        if (partner && symmetric_pairs(*partner, k)) return true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return false;
}

}  // namespace

bool brute_force_dtg(const Graph& g) {
  if (g.order() > 6) throw ContractError("brute_force_dtg: n > 6");
  int odd = 0;
  for (const auto& comp : components(g)) {
    const Graph c = induced_subgraph(g, comp).graph;
    if (bipartition(c)) {
      if (!brute_force_permutation(c)) return false;
    } else {
      if (++odd > 1 || !connected_dtg(c)) return false;
    }
  }
  return true;
}

std::vector<Vertex> brute_force_efficient_clique(const Graph& g) {
  const Vertex n = g.order();
  if (n > 16) throw ContractError("brute_force_efficient_clique: n > 16");
  std::vector<std::uint32_t> closed(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = 1U << v;
    for (Vertex w : g.neighbors(v)) closed[v] |= 1U << w;
  }
  std::vector<Vertex> best;
  long best_deg = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::vector<Vertex> s;
    long deg = 0;
    bool clique = true;
    for (Vertex v = 0; v < n && clique; ++v) {
      if (!(mask >> v & 1U)) continue;
      clique = (closed[v] & mask) == mask;
      s.push_back(v);
      deg += g.degree(v);
    }
    if (!clique) continue;
    if (s.size() > best.size() || (s.size() == best.size() && (deg < best_deg || (deg == best_deg && s < best)))) {
      best = std::move(s);
      best_deg = deg;
    }
  }
  return best;
}

CanonicalForm canonical_form(const Graph& g) {
  const Vertex n = g.order();
  if (n > 8) throw ContractError("canonical_form: n > 8");
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  std::stable_sort(label.begin(), label.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  // Blocks of equal degree; only orders inside a block are tried.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < label.size();) {
    std::size_t j = i;
    while (j < label.size() && g.degree(label[j]) == g.degree(label[i])) ++j;
    blocks.emplace_back(i, j);
    std::sort(label.begin() + static_cast<std::ptrdiff_t>(i), label.begin() + static_cast<std::ptrdiff_t>(j));
    i = j;
  }
  CanonicalForm best = ~CanonicalForm{0};
  std::function<void(std::size_t)> walk = [&](std::size_t b) {
    if (b == blocks.size()) {
      CanonicalForm code = 0;
      int bit = 0;
      for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j, ++bit) {
          if (g.adjacent(label[i], label[j])) code |= CanonicalForm{1} << bit;
        }
      }
      best = std::min(best, code);
      return;
    }
    auto first = label.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
    auto last = label.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
    do {
      walk(b + 1);
    } while (std::next_permutation(first, last));
  };
  walk(0);
  return best;
}

std::vector<Graph> enumerate_small_graphs(Vertex n) {
  if (n < 0 || n > 7) throw ContractError("enumerate_small_graphs: n must be in [0, 7]");
  std::vector<Edge> pairs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  auto build = [&](std::uint64_t mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1U) edges.push_back(pairs[k]);
    }
    return Graph::from_edges(n, edges);
  };
  std::vector<CanonicalForm> forms;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    forms.push_back(canonical_form(build(mask)));
  }
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  std::vector<Graph> out;
  out.reserve(forms.size());
  for (CanonicalForm f : forms) out.push_back(build(f));
  return out;
}

std::vector<ForbiddenHit> forbidden_scan(const Graph& g) {
  static const std::vector<std::pair<std::string, Graph>> kPatterns = {
      {"C5", patterns::cycle(5)},
      {"bull", patterns::bull()},
      {"butterfly", patterns::butterfly()},
      {"gem", patterns::gem()},
      {"2K3", patterns::two_k3()},
  };
  std::vector<ForbiddenHit> hits;
  for (const auto& [name, pattern] : kPatterns) {
    if (auto emb = find_induced_pattern(g, pattern)) hits.push_back({name, std::move(*emb)});
  }
  return hits;
}

WeightCertificate random_certificate(Vertex n, std::uint64_t seed, const RandomCertificateOptions& options) {
  if (n < 0) throw ContractError("random_certificate: negative n");
  const long den = options.denominator > 0 ? options.denominator : std::max<long>(4, 2L * n);
  const Rational lo_scaled = options.low * den;
  const Rational hi_scaled = options.high * den;
  mpz_class lo;
  mpz_class hi;
  mpz_cdiv_q(lo.get_mpz_t(), lo_scaled.get_num_mpz_t(), lo_scaled.get_den_mpz_t());
  mpz_fdiv_q(hi.get_mpz_t(), hi_scaled.get_num_mpz_t(), hi_scaled.get_den_mpz_t());
  const mpz_class span = hi - lo + 1;
  if (span < n || !span.fits_slong_p()) throw ContractError("random_certificate: range too small or too large");
  const auto range = static_cast<std::uint64_t>(span.get_si());
  const long base = lo.get_si();

  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> picks;
  picks.reserve(static_cast<std::size_t>(n));
  if (range <= 4 * static_cast<std::uint64_t>(n)) {
    std::vector<std::uint64_t> pool(range);
    std::iota(pool.begin(), pool.end(), 0);
    for (Vertex i = 0; i < n; ++i) {
      const std::uint64_t j = i + rng() % (range - i);
      std::swap(pool[i], pool[j]);
      picks.push_back(pool[i]);
    }
  } else {
    std::unordered_set<std::uint64_t> used;
    while (picks.size() < static_cast<std::size_t>(n)) {
      const std::uint64_t x = rng() % range;
      if (used.insert(x).second) picks.push_back(x);
    }
  }
  WeightCertificate cert{{}, 0, 2};
  cert.weights.reserve(picks.size());
  for (std::uint64_t x : picks) {
    Rational w(mpz_class(base + static_cast<long>(x)), mpz_class(den));
    w.canonicalize();
    cert.weights.push_back(std::move(w));
  }
  return cert;
}

}  // namespace dtg
