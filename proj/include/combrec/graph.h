#ifndef COMBREC_GRAPH_H_
#define COMBREC_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace combrec {

using Vertex = int;
using Bits = boost::dynamic_bitset<std::uint64_t>;
using Edge = std::pair<Vertex, Vertex>;

// Library operations refuse graphs above this order.
inline constexpr int kMaxVertices = 100000;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An ordered set of vertex indices. Always sorted ascending and duplicate-free.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  static VertexSet FromBits(const Bits& bits);

  bool contains(Vertex v) const;
  void insert(Vertex v);
  bool erase(Vertex v);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<Vertex>& members() const { return members_; }

  Bits ToBits(std::size_t universe) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

VertexSet Union(const VertexSet& a, const VertexSet& b);

// Finite simple undirected graph on vertices 0..n-1, stored as adjacency bit
// rows. Immutable once built.
class Graph {
 public:
  Graph() = default;
  // Edgeless graph on n vertices.
  explicit Graph(int n);
  // Throws GraphError on self-loops and out-of-range endpoints. Duplicate
  // pairs are accepted.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int vertex_count() const { return static_cast<int>(rows_.size()); }
  bool has_edge(Vertex u, Vertex v) const;
  const Bits& row(Vertex v) const;
  int degree(Vertex v) const;
  std::size_t edge_count() const;
  // Edges (u, v) with u < v, ordered by u then v.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph Complement(const Graph& g);
  friend struct GraphRows;
  std::vector<Bits> rows_;
};

// Builds a graph from rows that are already symmetric and loop-free.
struct GraphRows {
  static Graph Adopt(std::vector<Bits> rows);
};

Graph BuildGraph(int n, std::span<const Edge> edges);

Graph Complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  // to_original[i] is the host vertex that became vertex i.
  std::vector<Vertex> to_original;
};

// Vertices are renumbered densely in ascending original order.
InducedSubgraph Induce(const Graph& g, const VertexSet& s);

VertexSet Neighborhood(const Graph& g, Vertex v);

bool IsClique(const Graph& g, const VertexSet& s);
bool IsStable(const Graph& g, const VertexSet& s);

VertexSet AllVertices(const Graph& g);

}  // namespace combrec

#endif  // COMBREC_GRAPH_H_
