#include "combrec/graph.h"

#include <algorithm>
#include <string>

namespace combrec {
namespace {

void CheckVertex(const Graph& g, Vertex v, const char* what) {
  if (v < 0 || v >= g.vertex_count()) {
    throw GraphError(std::string(what) + ": vertex " + std::to_string(v) +
                     " out of range [0, " + std::to_string(g.vertex_count()) +
                     ")");
  }
}

void CheckMembers(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) CheckVertex(g, v, "vertex set");
}

void CheckOrder(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) +
                     " outside [0, " + std::to_string(kMaxVertices) + "]");
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::FromBits(const Bits& bits) {
  VertexSet out;
  out.members_.reserve(bits.count());
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) {
    out.members_.push_back(static_cast<Vertex>(i));
  }
  return out;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

bool VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) return false;
  members_.erase(it);
  return true;
}

Bits VertexSet::ToBits(std::size_t universe) const {
  Bits bits(universe);
  for (Vertex v : members_) bits.set(static_cast<std::size_t>(v));
  return bits;
}

VertexSet Union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

Graph::Graph(int n) {
  CheckOrder(n);
  rows_.assign(static_cast<std::size_t>(n), Bits(static_cast<std::size_t>(n)));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside [0, " + std::to_string(n) +
                       ")");
    }
    if (u == v) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") is a self-loop");
    }
    rows_[u].set(v);
    rows_[v].set(u);
  }
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

bool Graph::has_edge(Vertex u, Vertex v) const {
  CheckVertex(*this, u, "has_edge");
  CheckVertex(*this, v, "has_edge");
  return rows_[u].test(v);
}

const Bits& Graph::row(Vertex v) const {
  CheckVertex(*this, v, "row");
  return rows_[v];
}

int Graph::degree(Vertex v) const { return static_cast<int>(row(v).count()); }

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < vertex_count(); ++u) {
    const Bits& r = rows_[u];
    for (auto v = r.find_next(u); v != Bits::npos; v = r.find_next(v)) {
      out.emplace_back(u, static_cast<Vertex>(v));
    }
  }
  return out;
}

Graph GraphRows::Adopt(std::vector<Bits> rows) {
  Graph g;
  g.rows_ = std::move(rows);
  return g;
}

Graph BuildGraph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

Graph Complement(const Graph& g) {
  Graph out;
  out.rows_ = g.rows_;
  for (std::size_t v = 0; v < out.rows_.size(); ++v) {
    out.rows_[v].flip();
    out.rows_[v].reset(v);
  }
  return out;
}

InducedSubgraph Induce(const Graph& g, const VertexSet& s) {
  CheckMembers(g, s);
  const std::size_t k = s.size();
  std::vector<Bits> rows(k, Bits(k));
  const auto& members = s.members();
  for (std::size_t i = 0; i < k; ++i) {
    const Bits& r = g.row(members[i]);
    for (std::size_t j = i + 1; j < k; ++j) {
      if (r.test(members[j])) {
        rows[i].set(j);
        rows[j].set(i);
      }
    }
  }
  return {GraphRows::Adopt(std::move(rows)), members};
}

VertexSet Neighborhood(const Graph& g, Vertex v) {
  return VertexSet::FromBits(g.row(v));
}

bool IsClique(const Graph& g, const VertexSet& s) {
  CheckMembers(g, s);
  const Bits mask = s.ToBits(g.vertex_count());
  for (Vertex v : s) {
    Bits missing = mask - g.row(v);
    missing.reset(v);
    if (missing.any()) return false;
  }
  return true;
}

bool IsStable(const Graph& g, const VertexSet& s) {
  CheckMembers(g, s);
  const Bits mask = s.ToBits(g.vertex_count());
  for (Vertex v : s) {
    if (g.row(v).intersects(mask)) return false;
  }
  return true;
}

VertexSet AllVertices(const Graph& g) {
  std::vector<Vertex> all(static_cast<std::size_t>(g.vertex_count()));
  for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
  return VertexSet(std::move(all));
}

}  // namespace combrec
