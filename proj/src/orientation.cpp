// Transitive orientation by G-decomposition: repeatedly pick an edge of the
// remaining graph, grow its implication class under the Gamma relation of the
// remaining graph, orient the class and delete it. A conflict inside a class
// means the graph is not a comparability graph.

#include <algorithm>
#include <numeric>
#include <span>

#include "detail/merge_sort.hpp"
#include "dtg/errors.hpp"
#include "dtg/perm.hpp"

namespace dtg {

namespace {

class SparseOrientation {
 public:
  explicit SparseOrientation(const Graph& g) : g_(g), base_(static_cast<std::size_t>(g.order()) + 1, 0) {
    for (Vertex v = 0; v < g.order(); ++v) base_[v + 1] = base_[v] + g.degree(v);
    slot_edge_.resize(static_cast<std::size_t>(base_.back()));
    edges_ = g.edges();
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      auto [u, v] = edges_[k];
      slot_edge_[slot(u, v)] = static_cast<std::int64_t>(k);
      slot_edge_[slot(v, u)] = static_cast<std::int64_t>(k);
    }
    cls_.assign(edges_.size(), -1);
    dir_.assign(edges_.size(), 0);
    ok_ = run();
  }

  bool ok() const { return ok_; }

  // Requires u, v adjacent.
  bool arc(Vertex u, Vertex v) const { return dir_[edge_id(u, v)] == (u < v ? 1 : 2); }

  std::vector<Edge> arcs() const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      auto [u, v] = edges_[k];
      out.push_back(dir_[k] == 1 ? Edge{u, v} : Edge{v, u});
    }
    return out;
  }

  bool transitive() const {
    const Vertex n = g_.order();
    std::vector<std::vector<Vertex>> in(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
    for (auto [a, b] : arcs()) {
      out[a].push_back(b);
      in[b].push_back(a);
    }
    for (Vertex b = 0; b < n; ++b) {
      for (Vertex a : in[b]) {
        for (Vertex c : out[b]) {
          if (a == c || !g_.adjacent(a, c) || !arc(a, c)) return false;
        }
      }
    }
    return true;
  }

 private:
  std::int64_t slot(Vertex u, Vertex v) const {
    auto nb = g_.neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    return base_[u] + (it - nb.begin());
  }

  std::int64_t edge_id(Vertex u, Vertex v) const {
    auto nb = g_.neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return -1;
    return slot_edge_[base_[u] + (it - nb.begin())];
  }

  // Edge in the remaining graph of class `cur`: unassigned or in `cur`.
  bool present(std::int64_t e, std::int32_t cur) const { return e >= 0 && (cls_[e] == -1 || cls_[e] == cur); }

  bool run() {
    std::vector<Edge> stack;
    std::int32_t cur = 0;
    for (std::size_t start = 0; start < edges_.size(); ++start) {
      if (cls_[start] != -1) continue;
      cls_[start] = cur;
      dir_[start] = 1;
      stack.push_back(edges_[start]);
      auto force = [&](Vertex x, Vertex y) {
        const std::int64_t e = edge_id(x, y);
        const std::uint8_t d = x < y ? 1 : 2;
        if (cls_[e] == -1) {
          cls_[e] = cur;
          dir_[e] = d;
          stack.emplace_back(x, y);
          return true;
        }
        return dir_[e] == d;
      };
      while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        for (Vertex c : g_.neighbors(a)) {
          if (c == b || !present(edge_id(a, c), cur) || present(edge_id(b, c), cur)) continue;
          if (!force(a, c)) return false;
        }
        for (Vertex c : g_.neighbors(b)) {
          if (c == a || !present(edge_id(c, b), cur) || present(edge_id(a, c), cur)) continue;
          if (!force(c, b)) return false;
        }
      }
      ++cur;
    }
    return true;
  }

  const Graph& g_;
  std::vector<std::int64_t> base_;
  std::vector<std::int64_t> slot_edge_;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> cls_;
  std::vector<std::uint8_t> dir_;
  bool ok_ = false;
};

// Pair relations packed per 64-vertex block so one cache line serves a whole
// test: G-adjacency, deleted (earlier class), in the current class, arc
// direction (bit set for u->v in row u), and two work planes marking arcs
// whose forcing still has to be run from this row.
class PairState {
 public:
  enum Plane { kAdj = 0, kRemoved, kCur, kArc, kOut, kIn, kPlanes };

  explicit PairState(Vertex n)
      : words_((static_cast<std::size_t>(n) + 63) / 64), data_(kPlanes * words_ * static_cast<std::size_t>(n), 0) {}

  std::uint64_t* block(Vertex u, std::size_t w) { return data_.data() + kPlanes * (words_ * static_cast<std::size_t>(u) + w); }
  const std::uint64_t* block(Vertex u, std::size_t w) const {
    return data_.data() + kPlanes * (words_ * static_cast<std::size_t>(u) + w);
  }
  bool test(Plane p, Vertex u, Vertex v) const { return (block(u, static_cast<std::size_t>(v) >> 6)[p] >> (v & 63)) & 1U; }
  void set(Plane p, Vertex u, Vertex v) { block(u, static_cast<std::size_t>(v) >> 6)[p] |= std::uint64_t{1} << (v & 63); }
  std::size_t words() const { return words_; }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> data_;
};

// Same procedure on the complement of g without materializing it. Forcing an
// arc a->b of the complement only needs the c with bc missing from the
// remaining complement, i.e. c in N_G(b) or joined to b by a deleted edge, so
// the work per arc is proportional to G-degrees plus deleted degrees.
//
// The two halves of that work read rows a and b respectively. They are queued
// as bits in those rows and drained one row at a time, which keeps the row in
// cache while its pending arcs are processed.
class DenseComplementOrientation {
 public:
  explicit DenseComplementOrientation(const Graph& g)
      : g_(g), n_(g.order()), st_(n_), removed_list_(static_cast<std::size_t>(n_)) {
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : g.neighbors(u)) st_.set(PairState::kAdj, u, v);
    }
    ok_ = run();
  }

  bool ok() const { return ok_; }
  bool arc(Vertex u, Vertex v) const { return st_.test(PairState::kArc, u, v); }

 private:
  bool run() {
    const std::int64_t total = static_cast<std::int64_t>(n_) * (n_ - 1) / 2 - g_.size();
    std::int64_t done = 0;
    std::vector<char> touched(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> touched_list;
    std::vector<char> queued(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> queue;
    std::int64_t size = 0;

    auto enqueue = [&](Vertex v) {
      if (!queued[v]) {
        queued[v] = 1;
        queue.push_back(v);
      }
      if (!touched[v]) {
        touched[v] = 1;
        touched_list.push_back(v);
      }
    };
    auto claim = [&](Vertex x, Vertex y) {
      st_.set(PairState::kCur, x, y);
      st_.set(PairState::kCur, y, x);
      st_.set(PairState::kArc, x, y);
      st_.set(PairState::kOut, x, y);
      st_.set(PairState::kIn, y, x);
      ++size;
      enqueue(x);
      enqueue(y);
    };
    // Every c reached from an arc between `fixed` and `other` differs from
    // both, so only the pair {fixed, c} needs testing. outward: force
    // fixed->c, otherwise c->fixed.
    auto sweep = [&](std::span<const Vertex> cs, Vertex fixed, bool outward) {
      const std::uint64_t* row = st_.block(fixed, 0);
      for (Vertex c : cs) {
        const std::uint64_t* blk = row + PairState::kPlanes * (static_cast<std::size_t>(c) >> 6);
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        if ((blk[PairState::kAdj] | blk[PairState::kRemoved]) & bit) continue;
        if (blk[PairState::kCur] & bit) {
          if (((blk[PairState::kArc] & bit) != 0) != outward) return false;
          continue;
        }
        outward ? claim(fixed, c) : claim(c, fixed);
      }
      return true;
    };
    auto drain = [&](Vertex r) {
      for (std::size_t w = 0; w < st_.words(); ++w) {
        std::uint64_t* blk = st_.block(r, w);
        while (blk[PairState::kOut] | blk[PairState::kIn]) {
          for (int plane : {PairState::kOut, PairState::kIn}) {
            std::uint64_t bits = blk[plane];
            blk[plane] = 0;
            for (; bits != 0; bits &= bits - 1) {
              const auto o = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
              const bool outward = plane == PairState::kOut;
              if (!sweep(removed_list_[o], r, outward) || !sweep(g_.neighbors(o), r, outward)) return false;
            }
          }
        }
      }
      return true;
    };

    Vertex su = 0;
    while (done < total) {
      // Next remaining complement edge (su, sv) with su < sv.
      Vertex sv = -1;
      for (; su < n_; ++su) {
        for (std::size_t w = static_cast<std::size_t>(su + 1) >> 6; w < st_.words() && sv < 0; ++w) {
          const std::uint64_t* b = st_.block(su, w);
          std::uint64_t free = ~b[PairState::kAdj] & ~b[PairState::kRemoved];
          if (w == static_cast<std::size_t>(su + 1) >> 6) free &= ~std::uint64_t{0} << ((su + 1) & 63);
          if (free == 0) continue;
          const auto v = static_cast<Vertex>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(free)));
          if (v >= n_) break;
          sv = v;
        }
        if (sv >= 0) break;
      }
      if (sv < 0) throw InternalContradiction("complement edge count mismatch");

      size = 0;
      claim(su, sv);
      while (!queue.empty()) {
        const Vertex r = queue.back();
        queue.pop_back();
        queued[r] = 0;
        if (!drain(r)) return false;
      }
      done += size;
      if (done == total) break;
      for (Vertex u : touched_list) {
        for (std::size_t w = 0; w < st_.words(); ++w) {
          std::uint64_t* blk = st_.block(u, w);
          for (std::uint64_t bits = blk[PairState::kCur]; bits != 0; bits &= bits - 1) {
            removed_list_[u].push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
          }
          blk[PairState::kRemoved] |= blk[PairState::kCur];
          blk[PairState::kCur] = 0;
        }
        touched[u] = 0;
      }
      touched_list.clear();
    }
    return true;
  }

  const Graph& g_;
  Vertex n_;
  PairState st_;
  std::vector<std::vector<Vertex>> removed_list_;
  bool ok_ = false;
};

}  // namespace

std::optional<Orientation> transitive_orientation(const Graph& g) {
  SparseOrientation d(g);
  if (!d.ok() || !d.transitive()) return std::nullopt;
  return Orientation{d.arcs()};
}

std::optional<OrderPair> permutation_orderings(const Graph& g) {
  if (g.order() > kMaxGeneralOrder) {
    throw ContractError("permutation_orderings: order " + std::to_string(g.order()) + " exceeds " +
                        std::to_string(kMaxGeneralOrder));
  }
  SparseOrientation d(g);
  if (!d.ok()) return std::nullopt;
  DenseComplementOrientation dc(g);
  if (!dc.ok()) return std::nullopt;
  std::vector<Vertex> seq(static_cast<std::size_t>(g.order()));
  std::iota(seq.begin(), seq.end(), 0);
  detail::merge_sort(seq, [&](Vertex u, Vertex v) { return g.adjacent(u, v) ? d.arc(u, v) : dc.arc(u, v); });
  LinearOrder o1(std::move(seq));
  auto o2 = forced_partner_order(g, o1);
  if (!o2) return std::nullopt;
  return OrderPair{std::move(o1), std::move(*o2)};
}

}  // namespace dtg
