#include "pegsol/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace pegsol {

VertexSet::VertexSet(int universe) : n_(universe) {
  if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
  w_.assign((universe + 63) / 64, 0);
}

VertexSet VertexSet::from_bits(int universe, std::uint64_t bits) {
  VertexSet s(universe);
  if (universe < 64 && (bits >> universe) != 0)
    throw std::invalid_argument("VertexSet: bits outside universe");
  if (!s.w_.empty()) s.w_[0] = bits;
  return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> vs) {
  VertexSet s(universe);
  for (int v : vs) s.set(v);
  return s;
}

void VertexSet::check(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex out of range");
}

bool VertexSet::test(int v) const {
  check(v);
  return (w_[v >> 6] >> (v & 63)) & 1;
}

void VertexSet::set(int v) {
  check(v);
  w_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::reset(int v) {
  check(v);
  w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::count() const {
  int c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  if (o.n_ != n_) throw std::invalid_argument("VertexSet: universe mismatch");
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  if (o.n_ != n_) throw std::invalid_argument("VertexSet: universe mismatch");
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  if (o.n_ != n_) throw std::invalid_argument("VertexSet: universe mismatch");
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet r(n_);
  for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
  // keep padding bits zero
  if (n_ % 64 != 0 && !r.w_.empty())
    r.w_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  return r;
}

bool VertexSet::intersects(const VertexSet& o) const {
  if (o.n_ != n_) throw std::invalid_argument("VertexSet: universe mismatch");
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & o.w_[i]) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  if (o.n_ != n_) throw std::invalid_argument("VertexSet: universe mismatch");
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

int VertexSet::first() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return int(i) * 64 + std::countr_zero(w_[i]);
  return -1;
}

std::vector<int> VertexSet::elements() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < w_.size(); ++i)
    for (std::uint64_t b = w_[i]; b; b &= b - 1)
      out.push_back(int(i) * 64 + std::countr_zero(b));
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool sep = false;
  for (int v : elements()) {
    if (sep) os << ',';
    os << v;
    sep = true;
  }
  os << '}';
  return os.str();
}

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  adj_.assign(n, VertexSet(n));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : Graph(n) {
  for (auto [u, v] : edge_list) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::out_of_range("Graph::add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("Graph::add_edge: loop");
  if (adj_[u].test(v)) return;
  adj_[u].set(v);
  adj_[v].set(u);
  ++m_;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  if (u == v) return false;
  return adj_[u].test(v);
}

const VertexSet& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("Graph::neighbors: vertex out of range");
  return adj_[v];
}

VertexSet Graph::closed_neighborhood(int v) const {
  VertexSet s = neighbors(v);
  s.set(v);
  return s;
}

int Graph::degree(int v) const { return neighbors(v).count(); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u].elements())
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::operator==(const Graph& o) const {
  return n_ == o.n_ && adj_ == o.adj_;
}

namespace {

void require_positive(int x, const char* what) {
  if (x <= 0) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

Graph make_complete(int n) {
  require_positive(n, "complete: n");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph make_path(int n) {
  require_positive(n, "path: n");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be at least 3");
  Graph g = make_path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph make_star(int leaves) {
  require_positive(leaves, "star: leaf count");
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph make_complete_bipartite(int n, int m) {
  require_positive(n, "complete_bipartite: n");
  require_positive(m, "complete_bipartite: m");
  Graph g(n + m);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < m; ++v) g.add_edge(u, n + v);
  return g;
}

Graph make_hypercube(int dim) {
  require_positive(dim, "hypercube: dimension");
  if (dim > 12) throw std::invalid_argument("hypercube: dimension above 12 unsupported");
  int n = 1 << dim;
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int d = 0; d < dim; ++d)
      if (!(u & (1 << d))) g.add_edge(u, u | (1 << d));
  return g;
}

Graph make_paw() {
  return Graph(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
}

Graph make_k4_minus_e() {
  return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

Graph make_petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

Graph make_empty(int n) {
  require_positive(n, "empty: n");
  return Graph(n);
}

Graph make_named(const std::string& family, const std::vector<int>& params) {
  auto want = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("family '" + family + "' expects " +
                                  std::to_string(k) + " parameter(s)");
  };
  if (family == "complete") { want(1); return make_complete(params[0]); }
  if (family == "path") { want(1); return make_path(params[0]); }
  if (family == "cycle") { want(1); return make_cycle(params[0]); }
  if (family == "star") { want(1); return make_star(params[0]); }
  if (family == "complete_bipartite") { want(2); return make_complete_bipartite(params[0], params[1]); }
  if (family == "hypercube") { want(1); return make_hypercube(params[0]); }
  if (family == "paw") { want(0); return make_paw(); }
  if (family == "k4_minus_e") { want(0); return make_k4_minus_e(); }
  if (family == "petersen") { want(0); return make_petersen(); }
  if (family == "empty") { want(1); return make_empty(params[0]); }
  throw std::invalid_argument("unknown graph family '" + family + "'");
}

Graph join(const Graph& g, const Graph& h) {
  int gn = g.vertex_count(), hn = h.vertex_count();
  Graph j(gn + hn);
  for (auto [u, v] : g.edges()) j.add_edge(u, v);
  for (auto [u, v] : h.edges()) j.add_edge(gn + u, gn + v);
  for (int u = 0; u < gn; ++u)
    for (int v = 0; v < hn; ++v) j.add_edge(u, gn + v);
  return j;
}

std::pair<Graph, ProductLayout> cartesian(const Graph& g, const Graph& h) {
  ProductLayout layout{g.vertex_count(), h.vertex_count()};
  Graph p(layout.gn * layout.hn);
  for (int v = 0; v < layout.gn; ++v)
    for (auto [w, w2] : h.edges()) p.add_edge(layout.encode(v, w), layout.encode(v, w2));
  for (int w = 0; w < layout.hn; ++w)
    for (auto [v, v2] : g.edges()) p.add_edge(layout.encode(v, w), layout.encode(v2, w));
  return {std::move(p), layout};
}

}  // namespace pegsol
