#include "oracle.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "combrec/corpus.h"

namespace oracle {

const Pattern& P4() {
  static const Pattern p{"P4", 4, {{0, 1}, {1, 2}, {2, 3}}};
  return p;
}
const Pattern& C4() {
  static const Pattern p{"C4", 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  return p;
}
const Pattern& CoC4() {
  static const Pattern p{"CO_C4", 4, {{0, 1}, {2, 3}}};
  return p;
}
const Pattern& C5() {
  static const Pattern p{"C5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}};
  return p;
}
const Pattern& Chair() {
  // x y z t v: xy, yz, zt, zv
  static const Pattern p{"CHAIR", 5, {{0, 1}, {1, 2}, {2, 3}, {2, 4}}};
  return p;
}
const Pattern& CoChair() {
  static const Pattern p = [] {
    Pattern c{"CO_CHAIR", 5, {}};
    for (int u = 0; u < 5; ++u) {
      for (int v = u + 1; v < 5; ++v) {
        const auto& e = Chair().edges;
        if (std::find(e.begin(), e.end(), std::pair{u, v}) == e.end()) c.edges.emplace_back(u, v);
      }
    }
    return c;
  }();
  return p;
}

bool ContainsInduced(const combrec::Graph& g, const Pattern& p) {
  const int n = g.vertex_count();
  const int k = p.order;
  if (k > n) return false;
  std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
  for (auto [u, v] : p.edges) adj[u][v] = adj[v][u] = true;

  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> subset;
    for (int v = 0; v < n; ++v) {
      if (pick[v]) subset.push_back(v);
    }
    do {
      bool match = true;
      for (int i = 0; i < k && match; ++i) {
        for (int j = i + 1; j < k && match; ++j) {
          match = g.has_edge(subset[i], subset[j]) == adj[i][j];
        }
      }
      if (match) return true;
    } while (std::next_permutation(subset.begin(), subset.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

bool IsSplit(const combrec::Graph& g) {
  return !ContainsInduced(g, C4()) && !ContainsInduced(g, CoC4()) && !ContainsInduced(g, C5());
}

bool IsThreshold(const combrec::Graph& g) {
  return !ContainsInduced(g, C4()) && !ContainsInduced(g, CoC4()) && !ContainsInduced(g, P4());
}

bool IsComb(const combrec::Graph& g) {
  return IsSplit(g) && !ContainsInduced(g, Chair()) && !ContainsInduced(g, CoChair());
}

const std::vector<combrec::Graph>& Classes(int n) {
  static std::map<int, std::vector<combrec::Graph>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, combrec::GraphsUpToIso(n)).first;
  return it->second;
}

}  // namespace oracle
