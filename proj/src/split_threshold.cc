#include "combrec/split_threshold.h"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace combrec {
namespace {

void RequireDisjoint(const VertexSet& stable, const VertexSet& clique) {
  for (Vertex v : stable) {
    if (clique.contains(v)) {
      throw GraphError("vertex " + std::to_string(v) +
                       " is on both the stable and the clique side");
    }
  }
}

int CountNeighborsIn(const Graph& g, Vertex v, const Bits& mask) {
  return static_cast<int>((g.row(v) & mask).count());
}

}  // namespace

SplitResult ComputeSplitPartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) > g.degree(b);
  });

  Bits clique(n);
  std::size_t prefix = 0;
  for (; prefix < order.size(); ++prefix) {
    const Vertex v = order[prefix];
    if (!clique.is_subset_of(g.row(v))) break;
    clique.set(v);
  }
  Bits stable = ~clique;
  SplitPartition part{VertexSet::FromBits(stable), VertexSet::FromBits(clique)};
  if (IsStable(g, part.stable)) return part;

  if (auto w = FindFirst(g, kSplitObstructions)) return *w;
  throw InternalError("degree-order split partition failed on a graph with no "
                      "induced C4, co-C4 or C5");
}

bool IsValidSplitPartition(const Graph& g, const SplitPartition& part) {
  if (part.stable.size() + part.clique.size() !=
      static_cast<std::size_t>(g.vertex_count())) {
    return false;
  }
  for (Vertex v : part.stable) {
    if (v < 0 || v >= g.vertex_count() || part.clique.contains(v)) return false;
  }
  for (Vertex v : part.clique) {
    if (v < 0 || v >= g.vertex_count()) return false;
  }
  return IsStable(g, part.stable) && IsClique(g, part.clique);
}

bool IsCompleteSplit(const Graph& g, const VertexSet& stable,
                     const VertexSet& clique) {
  RequireDisjoint(stable, clique);
  if (!IsStable(g, stable) || !IsClique(g, clique)) return false;
  const Bits k = clique.ToBits(g.vertex_count());
  for (Vertex s : stable) {
    if (!k.is_subset_of(g.row(s))) return false;
  }
  return true;
}

bool IsPerfectSplit(const Graph& g, const VertexSet& stable,
                    const VertexSet& clique) {
  RequireDisjoint(stable, clique);
  if (!IsStable(g, stable) || !IsClique(g, clique)) return false;
  if (stable.size() != clique.size()) return false;
  const Bits s = stable.ToBits(g.vertex_count());
  const Bits k = clique.ToBits(g.vertex_count());
  for (Vertex v : stable) {
    if (CountNeighborsIn(g, v, k) != 1) return false;
  }
  for (Vertex v : clique) {
    if (CountNeighborsIn(g, v, s) != 1) return false;
  }
  return true;
}

VertexSet ThresholdDecomposition::StableSide() const {
  VertexSet out;
  for (const auto& a : stable_levels) out = Union(out, a);
  return out;
}

VertexSet ThresholdDecomposition::CliqueSide() const {
  VertexSet out;
  for (const auto& x : clique_levels) out = Union(out, x);
  return out;
}

ThresholdResult DecomposeThreshold(const Graph& g, const SplitPartition& part) {
  if (!IsValidSplitPartition(g, part)) {
    throw GraphError("threshold decomposition needs a valid split partition");
  }
  const int n = g.vertex_count();
  const Bits stable_mask = part.stable.ToBits(n);

  // Removing a minimum-degree clique vertex first and recursing is the same as
  // reinserting clique vertices in decreasing order of stable-side degree.
  std::vector<Vertex> insertion(part.clique.begin(), part.clique.end());
  std::stable_sort(insertion.begin(), insertion.end(), [&](Vertex a, Vertex b) {
    const int da = CountNeighborsIn(g, a, stable_mask);
    const int db = CountNeighborsIn(g, b, stable_mask);
    if (da != db) return da < db;
    return a < b;
  });
  std::reverse(insertion.begin(), insertion.end());

  // Levels kept as bitsets while building: a[i] = A_i, x[j] = X_{j+1}.
  std::vector<Bits> a{stable_mask};
  std::vector<Bits> x{Bits(n)};
  int levels = 0;

  auto p4_or_internal = [&]() -> ThresholdResult {
    if (auto w = FindInduced(g, PatternKind::kP4)) return *w;
    throw InternalError(
        "threshold construction failed on a graph with no induced P4");
  };

  for (Vertex v : insertion) {
    const Bits nbr = g.row(v) & stable_mask;
    Bits& top = a[levels];
    if (!nbr.is_subset_of(top)) return p4_or_internal();
    if (nbr.none()) {
      x[levels].set(v);
    } else if (levels >= 1 && nbr == top) {
      x[levels - 1].set(v);
    } else {
      Bits moved = nbr;
      top -= nbr;
      a.push_back(std::move(moved));
      Bits single(n);
      single.set(v);
      x.insert(x.begin() + levels, std::move(single));
      ++levels;
    }
  }

  ThresholdDecomposition dec;
  dec.n = levels;
  for (const auto& bits : a) dec.stable_levels.push_back(VertexSet::FromBits(bits));
  for (const auto& bits : x) dec.clique_levels.push_back(VertexSet::FromBits(bits));
  if (!ValidateThreshold(g, dec).empty()) return p4_or_internal();
  return dec;
}

std::string_view RuleName(ThresholdRule rule) {
  switch (rule) {
    case ThresholdRule::kTH1: return "TH1";
    case ThresholdRule::kTH2: return "TH2";
    case ThresholdRule::kTH3: return "TH3";
    case ThresholdRule::kTH4: return "TH4";
    case ThresholdRule::kTH5: return "TH5";
  }
  return "TH?";
}

std::vector<ThresholdViolation> ValidateThreshold(
    const Graph& g, const ThresholdDecomposition& dec) {
  std::vector<ThresholdViolation> out;
  const int n = g.vertex_count();
  if (dec.n < 0 || dec.stable_levels.size() != static_cast<std::size_t>(dec.n) + 1 ||
      dec.clique_levels.size() != static_cast<std::size_t>(dec.n) + 1) {
    out.push_back({ThresholdRule::kTH1, {}, "level arrays must have n+1 entries"});
    return out;
  }

  // TH1: disjoint cover, every member in range.
  std::vector<int> seen(n, 0);
  bool in_range = true;
  auto count = [&](const VertexSet& s) {
    for (Vertex v : s) {
      if (v < 0 || v >= n) {
        out.push_back({ThresholdRule::kTH1, {v}, "vertex out of range"});
        in_range = false;
      } else {
        ++seen[v];
      }
    }
  };
  for (const auto& s : dec.stable_levels) count(s);
  for (const auto& s : dec.clique_levels) count(s);
  for (Vertex v = 0; v < n; ++v) {
    if (seen[v] != 1) {
      out.push_back({ThresholdRule::kTH1, {v},
                     seen[v] == 0 ? "vertex not covered" : "vertex in several sets"});
    }
  }
  if (!in_range) return out;

  const VertexSet stable = dec.StableSide();
  const VertexSet clique = dec.CliqueSide();
  // TH2.
  for (auto it = stable.begin(); it != stable.end(); ++it) {
    for (auto jt = std::next(it); jt != stable.end(); ++jt) {
      if (g.has_edge(*it, *jt)) {
        out.push_back({ThresholdRule::kTH2, {*it, *jt}, "edge inside stable side"});
      }
    }
  }
  for (auto it = clique.begin(); it != clique.end(); ++it) {
    for (auto jt = std::next(it); jt != clique.end(); ++jt) {
      if (!g.has_edge(*it, *jt)) {
        out.push_back({ThresholdRule::kTH2, {*it, *jt}, "non-edge inside clique side"});
      }
    }
  }
  // TH3.
  for (int i = 1; i <= dec.n; ++i) {
    if (dec.A(i).empty()) {
      out.push_back({ThresholdRule::kTH3, {}, "A_" + std::to_string(i) + " is empty"});
    }
    if (dec.X(i).empty()) {
      out.push_back({ThresholdRule::kTH3, {}, "X_" + std::to_string(i) + " is empty"});
    }
  }
  // TH4 and TH5.
  for (int i = 0; i <= dec.n; ++i) {
    for (int j = 1; j <= dec.n + 1; ++j) {
      const bool mandated = j <= i;
      for (Vertex s : dec.A(i)) {
        for (Vertex k : dec.X(j)) {
          const bool edge = g.has_edge(s, k);
          if (mandated && !edge) {
            out.push_back({ThresholdRule::kTH4, {s, k},
                           "A_" + std::to_string(i) + " not complete to X_" +
                               std::to_string(j)});
          } else if (!mandated && edge) {
            out.push_back({ThresholdRule::kTH5, {s, k},
                           "edge between A_" + std::to_string(i) + " and X_" +
                               std::to_string(j)});
          }
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    return std::tie(l.rule, l.vertices) < std::tie(r.rule, r.vertices);
  });
  return out;
}

bool IsThreshold(const Graph& g) {
  const SplitResult split = ComputeSplitPartition(g);
  const auto* part = std::get_if<SplitPartition>(&split);
  if (part == nullptr) return false;
  return std::holds_alternative<ThresholdDecomposition>(DecomposeThreshold(g, *part));
}

}  // namespace combrec
