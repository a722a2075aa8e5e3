// Bipartite permutation graphs via strong orderings built from BFS layers.
//
// Starting from an end vertex s of a strong ordering, BFS layers are
// consecutive blocks: side(s) reads L0 L2 L4 ..., the other side L1 L3 ....
// An end vertex lies in the last BFS layer from any root, so the candidates
// are the last-layer vertices (one per twin class); each is tried until the
// resulting pair of orders is certified.

#include <algorithm>
#include <limits>
#include <tuple>

#include "detail/merge_sort.hpp"
#include "dtg/errors.hpp"
#include "dtg/perm.hpp"

namespace dtg {

namespace {

class ComponentOrderer {
 public:
  explicit ComponentOrderer(const Graph& g)
      : g_(g), dist_(static_cast<std::size_t>(g.order()), -1), pos1_(dist_.size()), pos2_(dist_.size()),
        key_(dist_.size()) {}

  // Appends the component's two orders to o1/o2; false when none certifies.
  bool run(const std::vector<Vertex>& comp, std::vector<Vertex>& o1, std::vector<Vertex>& o2) {
    if (comp.size() == 1) {
      o1.push_back(comp[0]);
      o2.push_back(comp[0]);
      return true;
    }
    auto layers = bfs(comp[0]);
    std::vector<Vertex> cands = layers.back();
    std::sort(cands.begin(), cands.end(), [&](Vertex a, Vertex b) {
      auto na = g_.neighbors(a);
      auto nb = g_.neighbors(b);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (!std::equal(na.begin(), na.end(), nb.begin(), nb.end())) {
        return std::lexicographical_compare(na.begin(), na.end(), nb.begin(), nb.end());
      }
      return a < b;
    });
    cands.erase(std::unique(cands.begin(), cands.end(),
                            [&](Vertex a, Vertex b) {
                              auto na = g_.neighbors(a);
                              auto nb = g_.neighbors(b);
                              return std::equal(na.begin(), na.end(), nb.begin(), nb.end());
                            }),
                cands.end());
    std::int64_t comp_edges = 0;
    for (Vertex v : comp) comp_edges += g_.degree(v);
    comp_edges /= 2;
    for (Vertex s : cands) {
      std::vector<Vertex> a;
      std::vector<Vertex> b;
      if (attempt(s, a, b) && certify(a, b, comp_edges)) {
        o1.insert(o1.end(), a.begin(), a.end());
        o2.insert(o2.end(), b.begin(), b.end());
        return true;
      }
    }
    return false;
  }

 private:
  std::vector<std::vector<Vertex>> bfs(Vertex s) {
    std::vector<std::vector<Vertex>> layers{{s}};
    std::vector<Vertex> seen{s};
    dist_[s] = 0;
    while (true) {
      std::vector<Vertex> next;
      for (Vertex v : layers.back()) {
        for (Vertex w : g_.neighbors(v)) {
          if (dist_[w] < 0) {
            dist_[w] = static_cast<Vertex>(layers.size());
            next.push_back(w);
            seen.push_back(w);
          }
        }
      }
      if (next.empty()) break;
      layers.push_back(std::move(next));
    }
    for (Vertex v : seen) dist_[v] = -1;
    return layers;
  }

  bool attempt(Vertex s, std::vector<Vertex>& o1, std::vector<Vertex>& o2) {
    auto layers = bfs(s);
    for (std::size_t k = 0; k < layers.size(); ++k) {
      for (Vertex v : layers[k]) dist_[v] = static_cast<Vertex>(k);
    }
    // pos1_ temporarily holds the rank of a vertex inside its layer.
    pos1_[s] = 0;
    for (std::size_t k = 1; k < layers.size(); ++k) {
      const auto kk = static_cast<Vertex>(k);
      for (Vertex v : layers[k]) {
        Vertex prev = 0;
        Vertex next = 0;
        Vertex lo = std::numeric_limits<Vertex>::max();
        Vertex hi = -1;
        for (Vertex w : g_.neighbors(v)) {
          if (dist_[w] == kk - 1) {
            ++prev;
            lo = std::min(lo, pos1_[w]);
            hi = std::max(hi, pos1_[w]);
          } else if (dist_[w] == kk + 1) {
            ++next;
          }
        }
        key_[v] = next == 0 ? Key{0, lo, hi} : Key{1, -prev, next};
      }
      auto& layer = layers[k];
      std::sort(layer.begin(), layer.end(), [&](Vertex a, Vertex b) {
        return std::tie(key_[a], a) < std::tie(key_[b], b);
      });
      for (std::size_t i = 0; i < layer.size(); ++i) pos1_[layer[i]] = static_cast<Vertex>(i);
    }
    std::vector<Vertex> xs;
    std::vector<Vertex> ys;
    for (std::size_t k = 0; k < layers.size(); ++k) {
      auto& side = k % 2 == 0 ? xs : ys;
      side.insert(side.end(), layers[k].begin(), layers[k].end());
    }
    // pos2_ holds the rank within Y.
    for (std::size_t j = 0; j < ys.size(); ++j) pos2_[ys[j]] = static_cast<Vertex>(j);
    auto first_neighbor = [&](Vertex x) {
      Vertex lo = std::numeric_limits<Vertex>::max();
      for (Vertex y : g_.neighbors(x)) lo = std::min(lo, pos2_[y]);
      return lo;
    };
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < xs.size() || j < ys.size()) {
      if (i < xs.size() && (j == ys.size() || static_cast<Vertex>(j) >= first_neighbor(xs[i]))) {
        o1.push_back(xs[i++]);
      } else {
        o1.push_back(ys[j++]);
      }
    }
    for (std::size_t k = 0; k < layers.size(); ++k) {
      for (Vertex v : layers[k]) dist_[v] = -1;
    }
    for (std::size_t r = 0; r < o1.size(); ++r) pos1_[o1[r]] = static_cast<Vertex>(r);
    o2 = o1;
    detail::merge_sort(o2, [&](Vertex u, Vertex v) { return g_.adjacent(u, v) != (pos1_[u] < pos1_[v]); });
    return true;
  }

  // Same test as orders_define_graph restricted to one component.
  bool certify(const std::vector<Vertex>& o1, const std::vector<Vertex>& o2, std::int64_t comp_edges) {
    const auto k = static_cast<Vertex>(o1.size());
    for (Vertex r = 0; r < k; ++r) {
      pos1_[o1[r]] = r;
      pos2_[o2[r]] = r;
    }
    for (Vertex u : o1) {
      for (Vertex v : g_.neighbors(u)) {
        if ((pos1_[u] < pos1_[v]) == (pos2_[u] < pos2_[v])) return false;
      }
    }
    std::vector<std::int64_t> tree(static_cast<std::size_t>(k) + 1, 0);
    std::int64_t inversions = 0;
    for (Vertex i = 0; i < k; ++i) {
      const Vertex r = pos2_[o1[i]];
      std::int64_t at_most = 0;
      for (Vertex t = r + 1; t > 0; t -= t & -t) at_most += tree[t];
      inversions += i - at_most;
      for (Vertex t = r + 1; t <= k; t += t & -t) ++tree[t];
    }
    return inversions == comp_edges;
  }

  struct Key {
    int group;
    Vertex a;
    Vertex b;
    friend bool operator<(const Key& l, const Key& r) { return std::tie(l.group, l.a, l.b) < std::tie(r.group, r.a, r.b); }
  };

  const Graph& g_;
  std::vector<Vertex> dist_;
  std::vector<Vertex> pos1_;
  std::vector<Vertex> pos2_;
  std::vector<Key> key_;
};

}  // namespace

std::optional<OrderPair> bipartite_permutation_orderings(const Graph& g, const Bipartition& bip) {
  if (bip.side.size() != static_cast<std::size_t>(g.order())) {
    throw ContractError("bipartite_permutation_orderings: bipartition size mismatch");
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (bip.side[u] == bip.side[v]) throw ContractError("bipartite_permutation_orderings: invalid bipartition");
    }
  }
  ComponentOrderer orderer(g);
  std::vector<Vertex> o1;
  std::vector<Vertex> o2;
  o1.reserve(static_cast<std::size_t>(g.order()));
  o2.reserve(static_cast<std::size_t>(g.order()));
  for (const auto& comp : components(g)) {
    if (!orderer.run(comp, o1, o2)) return std::nullopt;
  }
  OrderPair result{LinearOrder(std::move(o1)), LinearOrder(std::move(o2))};
  if (!orders_define_graph(g, result.first, result.second)) {
    throw InternalContradiction("bipartite_permutation_orderings: component orders do not combine");
  }
  return result;
}

}  // namespace dtg
