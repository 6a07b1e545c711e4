#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace pegsol {

// Set of vertex ids drawn from a fixed universe 0..n-1, backed by 64-bit
// words. Word storage grows with the universe, so graphs parsed from
// long-form graph6 (n >= 63) are representable; game search itself is
// restricted to single-word graphs by the engine caps.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  static VertexSet from_bits(int universe, std::uint64_t bits);
  static VertexSet of(int universe, std::initializer_list<int> vs);

  int universe() const { return n_; }
  bool test(int v) const;
  void set(int v);
  void reset(int v);
  int count() const;
  bool empty() const { return count() == 0; }

  // Low 64 bits; the whole set when universe() <= 64.
  std::uint64_t low64() const { return w_.empty() ? 0 : w_[0]; }

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  VertexSet complement() const;
  bool intersects(const VertexSet& o) const;
  bool is_subset_of(const VertexSet& o) const;
  bool operator==(const VertexSet& o) const = default;

  int first() const;  // smallest element, -1 if empty
  std::vector<int> elements() const;
  std::string to_string() const;  // "{0,2,5}"

 private:
  void check(int v) const;
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Immutable-by-convention simple graph on vertices 0..n-1 with per-vertex
// neighbor bitsets. Loops are rejected; adjacency is kept symmetric.
// Equality is labeled equality (same n, same edge set).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  const VertexSet& neighbors(int v) const;
  VertexSet closed_neighborhood(int v) const;
  int degree(int v) const;

  // Low 64 bits of the neighbor set; callers that rely on this enforce
  // vertex_count() <= 64 themselves.
  std::uint64_t neighbor_bits(int v) const { return neighbors(v).low64(); }

  std::vector<std::pair<int, int>> edges() const;  // lexicographic (u < v)
  bool operator==(const Graph& o) const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

// Named generators with canonical vertex numbering: paths/cycles numbered
// along the walk, star center at 0, K_{n,m} parts 0..n-1 and n..n+m-1.
// Families: complete, path, cycle, star, complete_bipartite, hypercube,
// paw, k4_minus_e, petersen, empty.
Graph make_named(const std::string& family, const std::vector<int>& params);

Graph make_complete(int n);
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_star(int leaves);  // K_{1,leaves}, center = 0
Graph make_complete_bipartite(int n, int m);
Graph make_hypercube(int dim);
Graph make_paw();         // triangle 1,2,3 plus pendant 0 attached to 1
Graph make_k4_minus_e();  // K_4 minus the edge {2,3}
Graph make_petersen();
Graph make_empty(int n);

// Join: disjoint union plus all cross edges. G keeps its ids, H shifts
// by |V(G)|.
Graph join(const Graph& g, const Graph& h);

// Vertex numbering of a cartesian product: (v, w) -> v*hn + w, so the
// copy of H over v and the copy of G over w are both arithmetic slices.
struct ProductLayout {
  int gn = 0;
  int hn = 0;
  int encode(int v, int w) const { return v * hn + w; }
  std::pair<int, int> decode(int x) const { return {x / hn, x % hn}; }
};

std::pair<Graph, ProductLayout> cartesian(const Graph& g, const Graph& h);

}  // namespace pegsol
