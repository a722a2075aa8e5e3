#include "dtg/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <functional>
#include <set>

#include "dtg/errors.hpp"

namespace dtg {

Graph::Graph(Vertex n) : n_(n), offsets_(static_cast<std::size_t>(n) + 1, 0) {
  if (n < 0) throw ContractError("negative vertex count");
  if (n <= kDenseLimit) {
    words_per_row_ = (static_cast<std::size_t>(n) + 63) / 64;
    bits_.assign(words_per_row_ * static_cast<std::size_t>(n), 0);
  }
}

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
  Graph g(n);
  std::vector<Edge> arcs;
  arcs.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ContractError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                          ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) throw ContractError("self-loop at vertex " + std::to_string(u));
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  g.adj_.resize(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    ++g.offsets_[arcs[i].first + 1];
    g.adj_[i] = arcs[i].second;
  }
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  if (!g.bits_.empty()) {
    for (auto [u, v] : arcs) {
      g.bits_[static_cast<std::size_t>(u) * g.words_per_row_ + static_cast<std::size_t>(v) / 64] |=
          std::uint64_t{1} << (v % 64);
    }
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u == v) return false;
  if (!bits_.empty()) {
    return (bits_[static_cast<std::size_t>(u) * words_per_row_ + static_cast<std::size_t>(v) / 64] >>
            (v % 64)) & 1U;
  }
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view tok, long long& out) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && p == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  long long n = -1;
  std::vector<Edge> edges;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto toks = split_ws(line);
    if (n < 0) {
      if (toks.size() != 1 || !parse_int(toks[0], n) || n < 0 || n > (1LL << 30)) {
        throw ParseError(line_no, "expected the vertex count");
      }
      continue;
    }
    long long u = 0;
    long long v = 0;
    if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v)) {
      throw ParseError(line_no, "expected 'u v'");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line_no, "vertex index out of range");
    if (u == v) throw ParseError(line_no, "self-loop");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (n < 0) throw ParseError(line_no == 0 ? 1 : line_no, "missing vertex count");
  return Graph::from_edges(static_cast<Vertex>(n), edges);
}

std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError(0, "invalid graph6 character");
  }
  if (text.empty()) throw ParseError(0, "empty graph6 string");
  std::size_t i = 0;
  std::uint64_t n = 0;
  auto take = [&](int count) {
    std::uint64_t value = 0;
    for (int k = 0; k < count; ++k) {
      if (i >= text.size()) throw ParseError(0, "truncated graph6 header");
      value = (value << 6) | static_cast<std::uint64_t>(text[i++] - 63);
    }
    return value;
  };
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] != 126) {
    ++i;
    n = take(3);
  } else {
    i += 2;
    n = take(6);
  }
  if (n > (1U << 30)) throw ParseError(0, "graph6 order too large");
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t chars = (bits + 5) / 6;
  if (text.size() - i != chars) throw ParseError(0, "graph6 bit stream length mismatch");
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t r = 0; r < j; ++r, ++k) {
      const int byte = text[i + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(r), static_cast<Vertex>(j));
    }
  }
  return Graph::from_edges(static_cast<Vertex>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  auto put = [&](std::uint64_t value, int count) {
    for (int k = count - 1; k >= 0; --k) out.push_back(static_cast<char>(((value >> (6 * k)) & 63) + 63));
  };
  if (n <= 62) {
    put(n, 1);
  } else if (n <= 258047) {
    out.push_back(126);
    put(n, 3);
  } else {
    out.append(2, static_cast<char>(126));
    put(n, 6);
  }
  int acc = 0;
  int filled = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t r = 0; r < j; ++r) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(r), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_graph_auto(std::string_view text) {
  auto t = trim(text);
  if (!t.empty() && (std::isdigit(static_cast<unsigned char>(t.front())) || t.front() == '#')) {
    return parse_edge_list(text);
  }
  return parse_graph6(t);
}

// ------------------------------------------------------------ structure

Graph complement(const Graph& g) {
  const Vertex n = g.order();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    auto it = nb.begin();
    for (Vertex v = u + 1; v < n; ++v) {
      while (it != nb.end() && *it < v) ++it;
      if (it == nb.end() || *it != v) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Vertex v = s[i];
    if (v < 0 || v >= g.order()) throw ContractError("induced_subgraph: vertex out of range");
    if (local[v] != -1) throw ContractError("induced_subgraph: repeated vertex");
    local[v] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (Vertex w : g.neighbors(s[i])) {
      if (local[w] > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), local[w]);
    }
  }
  return {Graph::from_edges(static_cast<Vertex>(s.size()), edges), {s.begin(), s.end()}};
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const Vertex n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const Vertex n = g.order();
  Bipartition b;
  b.side.assign(static_cast<std::size_t>(n), 2);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (b.side[s] != 2) continue;
    b.side[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (b.side[w] == 2) {
          b.side[w] = static_cast<std::uint8_t>(1 - b.side[v]);
          queue.push_back(w);
        } else if (b.side[w] == b.side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) (b.side[v] == 0 ? b.x : b.y).push_back(v);
  return b;
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_threshold(const Graph& g) {
  const Vertex n = g.order();
  std::vector<Vertex> deg(static_cast<std::size_t>(n));
  std::set<std::pair<Vertex, Vertex>> by_degree;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    by_degree.emplace(deg[v], v);
  }
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  Vertex remaining = n;
  while (remaining > 0) {
    Vertex pick = -1;
    if (by_degree.begin()->first == 0) {
      pick = by_degree.begin()->second;
    } else if (std::prev(by_degree.end())->first == remaining - 1) {
      pick = std::prev(by_degree.end())->second;
    } else {
      return false;
    }
    by_degree.erase({deg[pick], pick});
    alive[pick] = 0;
    --remaining;
    for (Vertex w : g.neighbors(pick)) {
      if (!alive[w]) continue;
      by_degree.erase({deg[w], w});
      by_degree.emplace(--deg[w], w);
    }
  }
  return true;
}

std::optional<std::vector<Vertex>> find_induced_pattern(const Graph& host, const Graph& pattern) {
  const Vertex k = pattern.order();
  if (k > 6) throw ContractError("find_induced_pattern: pattern order exceeds 6");
  if (k > host.order()) return std::nullopt;
  if (k == 0) return std::vector<Vertex>{};

  // Match pattern vertices in an order where each vertex has as many already
  // placed neighbors as possible, so candidates come from a neighbor list.
  std::vector<Vertex> order;
  std::vector<char> placed(static_cast<std::size_t>(k), 0);
  for (Vertex step = 0; step < k; ++step) {
    Vertex best = -1;
    int best_links = -1;
    for (Vertex p = 0; p < k; ++p) {
      if (placed[p]) continue;
      int links = 0;
      for (Vertex q : pattern.neighbors(p)) links += placed[q];
      if (links > best_links || (links == best_links && pattern.degree(p) > pattern.degree(best))) {
        best = p;
        best_links = links;
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }
  std::vector<Vertex> anchor(static_cast<std::size_t>(k), -1);
  for (Vertex i = 1; i < k; ++i) {
    for (Vertex j = 0; j < i; ++j) {
      if (pattern.adjacent(order[i], order[j])) {
        anchor[i] = order[j];
        break;
      }
    }
  }

  std::vector<Vertex> image(static_cast<std::size_t>(k), -1);
  std::vector<char> used(static_cast<std::size_t>(host.order()), 0);
  std::function<bool(Vertex)> extend = [&](Vertex depth) -> bool {
    if (depth == k) return true;
    const Vertex p = order[depth];
    auto consider = [&](Vertex h) -> bool {
      if (used[h] || host.degree(h) < pattern.degree(p)) return false;
      for (Vertex j = 0; j < depth; ++j) {
        const Vertex q = order[j];
        if (host.adjacent(h, image[q]) != pattern.adjacent(p, q)) return false;
      }
      image[p] = h;
      used[h] = 1;
      if (extend(depth + 1)) return true;
      used[h] = 0;
      image[p] = -1;
      return false;
    };
    if (anchor[depth] >= 0) {
      for (Vertex h : host.neighbors(image[anchor[depth]])) {
        if (consider(h)) return true;
      }
    } else {
      for (Vertex h = 0; h < host.order(); ++h) {
        if (consider(h)) return true;
      }
    }
    return false;
  };
  if (extend(0)) return image;
  return std::nullopt;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph::from_edges(a.order() + b.order(), edges);
}

namespace patterns {

namespace {
Graph make(Vertex n, std::initializer_list<Edge> edges) {
  return Graph::from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}
}  // namespace

Graph complete(Vertex n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return Graph::from_edges(n, e);
}

Graph path(Vertex n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

Graph cycle(Vertex n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

Graph star(Vertex leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, e);
}

Graph bull() { return make(5, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 4}}); }
Graph butterfly() { return make(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }
Graph gem() { return make(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}); }
Graph house() { return make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}}); }
Graph wheel4() { return make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}); }
Graph co_fork() { return complement(make(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}})); }
Graph co_banner() { return complement(make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}})); }
Graph co_p2_p3() { return complement(make(5, {{0, 1}, {2, 3}, {3, 4}})); }
Graph paw() { return make(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }
Graph two_k2() { return make(4, {{0, 1}, {2, 3}}); }
Graph two_k3() { return make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }
Graph bipartite_net() { return make(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}, {2, 6}}); }
Graph bipartite_tent() {
  return make(7, {{0, 1}, {0, 3}, {0, 5}, {1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}});
}

}  // namespace patterns

}  // namespace dtg
