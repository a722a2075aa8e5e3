#include "dtg/perm.hpp"

#include <algorithm>
#include <numeric>

#include "detail/merge_sort.hpp"
#include "dtg/errors.hpp"

namespace dtg {

LinearOrder::LinearOrder(std::vector<Vertex> seq) : seq_(std::move(seq)), pos_(seq_.size(), -1) {
  const auto n = static_cast<Vertex>(seq_.size());
  for (Vertex i = 0; i < n; ++i) {
    const Vertex v = seq_[i];
    if (v < 0 || v >= n || pos_[v] != -1) throw ContractError("LinearOrder: not a permutation");
    pos_[v] = i;
  }
}

LinearOrder LinearOrder::identity(Vertex n) {
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 0);
  return LinearOrder(std::move(seq));
}

LinearOrder LinearOrder::reversed() const {
  return LinearOrder(std::vector<Vertex>(seq_.rbegin(), seq_.rend()));
}

bool orders_define_graph(const Graph& g, const LinearOrder& o1, const LinearOrder& o2) {
  const Vertex n = g.order();
  if (o1.size() != n || o2.size() != n) return false;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && o1.before(u, v) == o2.before(u, v)) return false;
    }
  }
  // Count pairs reversed between the orders with a Fenwick tree over o2 ranks.
  std::vector<std::int64_t> tree(static_cast<std::size_t>(n) + 1, 0);
  std::int64_t inversions = 0;
  for (Vertex i = 0; i < n; ++i) {
    const Vertex r = o2.position(o1[i]);
    std::int64_t at_most = 0;
    for (Vertex k = r + 1; k > 0; k -= k & -k) at_most += tree[k];
    inversions += i - at_most;
    for (Vertex k = r + 1; k <= n; k += k & -k) ++tree[k];
  }
  return inversions == g.size();
}

std::optional<LinearOrder> forced_partner_order(const Graph& g, const LinearOrder& o1) {
  if (o1.size() != g.order()) throw ContractError("forced_partner_order: order size mismatch");
  std::vector<Vertex> seq = o1.sequence();
  detail::merge_sort(seq, [&](Vertex u, Vertex v) { return g.adjacent(u, v) != o1.before(u, v); });
  LinearOrder o2(std::move(seq));
  if (!orders_define_graph(g, o1, o2)) return std::nullopt;
  return o2;
}

PermutationDiagram diagram_from_orderings(const LinearOrder& o1, const LinearOrder& o2) {
  if (o1.size() != o2.size()) throw ContractError("diagram_from_orderings: size mismatch");
  PermutationDiagram d;
  d.x1.resize(static_cast<std::size_t>(o1.size()));
  d.x2.resize(static_cast<std::size_t>(o1.size()));
  for (Vertex v = 0; v < o1.size(); ++v) {
    d.x1[v] = o1.position(v);
    d.x2[v] = o2.position(v);
  }
  return d;
}

namespace {

void check_shape(const PermutationDiagram& d) {
  if (d.x1.size() != d.x2.size()) throw ContractError("diagram: x1 and x2 differ in length");
}

// Vertices sorted by coordinate; throws on a repeated coordinate.
LinearOrder order_by(const std::vector<Rational>& x) {
  std::vector<Vertex> seq(x.size());
  std::iota(seq.begin(), seq.end(), 0);
  std::sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) { return x[a] < x[b]; });
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (x[seq[i - 1]] == x[seq[i]]) {
      throw ContractError("diagram: vertices " + std::to_string(seq[i - 1]) + " and " +
                          std::to_string(seq[i]) + " share a coordinate");
    }
  }
  return LinearOrder(std::move(seq));
}

}  // namespace

Graph graph_from_diagram(const PermutationDiagram& d) {
  check_shape(d);
  order_by(d.x1);
  order_by(d.x2);
  const auto n = static_cast<Vertex>(d.x1.size());
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if ((d.x1[u] < d.x1[v]) != (d.x2[u] < d.x2[v])) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

bool diagram_represents(const Graph& g, const PermutationDiagram& d) {
  check_shape(d);
  if (static_cast<Vertex>(d.x1.size()) != g.order()) return false;
  return orders_define_graph(g, order_by(d.x1), order_by(d.x2));
}

bool neighborhood_equivalent(const Graph& g, const LinearOrder& a, const LinearOrder& b) {
  if (a.size() != g.order() || b.size() != g.order()) throw ContractError("neighborhood_equivalent: size mismatch");
  for (Vertex i = 0; i < a.size(); ++i) {
    auto na = g.neighbors(a[i]);
    auto nb = g.neighbors(b[i]);
    if (!std::equal(na.begin(), na.end(), nb.begin(), nb.end())) return false;
  }
  return true;
}

std::string format_diagram(const PermutationDiagram& d) {
  check_shape(d);
  std::string out;
  for (std::size_t v = 0; v < d.x1.size(); ++v) {
    out += std::to_string(v) + " " + to_string(d.x1[v]) + " " + to_string(d.x2[v]) + "\n";
  }
  return out;
}

PermutationDiagram parse_diagram(std::string_view text) {
  struct Row {
    long long v;
    Rational x1, x2;
  };
  std::vector<Row> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string line(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    std::vector<std::string> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) toks.push_back(line.substr(i, j - i));
      i = j;
    }
    if (toks.empty()) continue;
    if (toks.size() != 3) throw ParseError(line_no, "expected 'v x1 x2'");
    Row row;
    try {
      row.v = std::stoll(toks[0]);
      row.x1 = parse_rational(toks[1]);
      row.x2 = parse_rational(toks[2]);
    } catch (const std::exception& e) {
      throw ParseError(line_no, e.what());
    }
    rows.push_back(std::move(row));
  }
  PermutationDiagram d;
  d.x1.resize(rows.size());
  d.x2.resize(rows.size());
  std::vector<char> seen(rows.size(), 0);
  for (auto& row : rows) {
    if (row.v < 0 || row.v >= static_cast<long long>(rows.size()) || seen[row.v]) {
      throw ParseError(0, "diagram vertices must be 0..n-1, each once");
    }
    seen[row.v] = 1;
    d.x1[row.v] = std::move(row.x1);
    d.x2[row.v] = std::move(row.x2);
  }
  return d;
}

}  // namespace dtg
