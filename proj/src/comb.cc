#include "combrec/comb.h"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "combrec/patterns.h"

namespace combrec {
namespace {

enum class Side { kA, kX, kM, kY };

struct Role {
  Side side;
  int index;  // A_i, X_j, M_i or Y_j with the 1-based (A: 0-based) subscript
};

std::string Name(Side side, int index) {
  static constexpr const char* kNames[] = {"A_", "X_", "M_", "Y_"};
  return kNames[static_cast<int>(side)] + std::to_string(index);
}

bool ShapeOk(const CombDecomposition& d, std::string* why) {
  if (d.n < 0) return *why = "n must be nonnegative", false;
  if (d.l < 1) return *why = "l must be at least 1", false;
  if (d.k0 < 1 || d.k0 > d.l) return *why = "k0 must lie in [1, l]", false;
  const auto n1 = static_cast<std::size_t>(d.n) + 1;
  const auto l = static_cast<std::size_t>(d.l);
  if (d.A.size() != n1 || d.X.size() != n1) {
    return *why = "A and X must have n+1 entries", false;
  }
  if (d.M.size() != l || d.matchings.size() != l || d.thick.size() != l) {
    return *why = "M, matchings and thick must have l entries", false;
  }
  if (d.Y.size() != l + 1) return *why = "Y must have l+1 entries", false;
  return true;
}

}  // namespace

std::string_view RuleName(CombRule rule) {
  static constexpr std::string_view kNames[] = {"CB1", "CB2", "CB3", "CB4",
                                                "CB5", "CB6", "CB7", "CB8",
                                                "CB9", "CB10"};
  return kNames[static_cast<int>(rule)];
}

CombDecomposition CombDecomposition::Empty(int n, int l) {
  CombDecomposition d;
  d.n = n;
  d.l = l;
  d.k0 = l;
  d.A.assign(n + 1, {});
  d.X.assign(n + 1, {});
  d.M.assign(l, {});
  d.Y.assign(l + 1, {});
  d.matchings.assign(l, {});
  d.thick.assign(l, false);
  return d;
}

VertexSet CombDecomposition::StableSide() const {
  VertexSet out;
  for (const auto& s : A) out = Union(out, s);
  for (const auto& s : M) out = Union(out, s);
  return out;
}

VertexSet CombDecomposition::CliqueSide() const {
  VertexSet out;
  for (const auto& s : X) out = Union(out, s);
  for (const auto& s : Y) out = Union(out, s);
  return out;
}

void CombDecomposition::Normalize() {
  for (auto& m : matchings) std::sort(m.begin(), m.end());
}

std::vector<CombViolation> ValidateComb(const Graph& g,
                                        const CombDecomposition& dec) {
  std::vector<CombViolation> out;
  auto report = [&](CombRule rule, std::vector<Vertex> vs, std::string detail) {
    out.push_back({rule, std::move(vs), std::move(detail)});
  };

  std::string why;
  if (!ShapeOk(dec, &why)) {
    report(CombRule::kCB1, {}, why);
    return out;
  }

  // CB1: every vertex carries exactly one role.
  const int nv = g.vertex_count();
  std::vector<std::vector<Role>> roles(nv);
  bool in_range = true;
  auto assign = [&](const VertexSet& s, Side side, int index) {
    for (Vertex v : s) {
      if (v < 0 || v >= nv) {
        report(CombRule::kCB1, {v}, Name(side, index) + " holds an out-of-range vertex");
        in_range = false;
      } else {
        roles[v].push_back({side, index});
      }
    }
  };
  for (int i = 0; i <= dec.n; ++i) assign(dec.A_(i), Side::kA, i);
  for (int j = 1; j <= dec.n + 1; ++j) assign(dec.X_(j), Side::kX, j);
  for (int i = 1; i <= dec.l; ++i) assign(dec.M_(i), Side::kM, i);
  for (int j = 2; j <= dec.l + 2; ++j) assign(dec.Y_(j), Side::kY, j);
  for (Vertex v = 0; v < nv; ++v) {
    if (roles[v].empty()) report(CombRule::kCB1, {v}, "vertex not covered");
    if (roles[v].size() > 1) report(CombRule::kCB1, {v}, "vertex in several sets");
  }
  if (!in_range) return out;
  for (Vertex v = 0; v < nv; ++v) {
    if (roles[v].size() != 1) {
      std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(a.rule, a.vertices, a.detail) <
               std::tie(b.rule, b.vertices, b.detail);
      });
      return out;
    }
  }
  auto role = [&](Vertex v) { return roles[v].front(); };
  // Level of a clique-side role, with X_1 acting as Y_1; 0 when not a level.
  auto level_of = [&](const Role& r) {
    if (r.side == Side::kY) return r.index;
    if (r.side == Side::kX && r.index == 1) return 1;
    return 0;
  };

  // CB6: per-level pairing structure.
  std::set<MatchedPair> matched;
  for (int i = 1; i <= dec.l; ++i) {
    const VertexSet& mi = dec.M_(i);
    const VertexSet& yi = dec.Y_(i);
    const auto& pairs = dec.matchings[i - 1];
    const std::string lvl = "level " + std::to_string(i);
    if (mi.empty() || yi.empty()) {
      for (const auto& [y, m] : pairs) {
        report(CombRule::kCB6, {y, m}, lvl + " is one-sided but lists a pair");
      }
      continue;
    }
    if (mi.size() != yi.size()) {
      report(CombRule::kCB6, {}, lvl + ": |Y| != |M|");
    }
    std::map<Vertex, int> ycount, mcount;
    for (const auto& [y, m] : pairs) {
      if (!yi.contains(y) || !mi.contains(m)) {
        report(CombRule::kCB6, {y, m}, lvl + ": pair outside Y_i x M_i");
        continue;
      }
      ++ycount[y];
      ++mcount[m];
      matched.insert({y, m});
    }
    for (Vertex y : yi) {
      if (ycount[y] != 1) report(CombRule::kCB6, {y}, lvl + ": Y vertex not matched exactly once");
    }
    for (Vertex m : mi) {
      if (mcount[m] != 1) report(CombRule::kCB6, {m}, lvl + ": M vertex not matched exactly once");
    }
  }

  // CB9: nonempty sets.
  for (int i = 1; i <= dec.n; ++i) {
    if (dec.A_(i).empty()) report(CombRule::kCB9, {}, "A_" + std::to_string(i) + " is empty");
    if (dec.X_(i).empty()) report(CombRule::kCB9, {}, "X_" + std::to_string(i) + " is empty");
  }
  for (int i = 1; i < dec.l; ++i) {
    if (dec.M_(i).empty() && dec.Y_(i).empty()) {
      report(CombRule::kCB9, {}, "level " + std::to_string(i) + " is empty");
    }
  }

  // Pairwise adjacency rules.
  enum class Need { kEdge, kNonEdge };
  for (Vertex u = 0; u < nv; ++u) {
    for (Vertex v = u + 1; v < nv; ++v) {
      Role ru = role(u), rv = role(v);
      const bool su = ru.side == Side::kA || ru.side == Side::kM;
      const bool sv = rv.side == Side::kA || rv.side == Side::kM;
      const bool edge = g.has_edge(u, v);
      if (su && sv) {
        if (edge) report(CombRule::kCB2, {u, v}, "edge inside A ∪ M");
        continue;
      }
      if (!su && !sv) {
        if (!edge) report(CombRule::kCB3, {u, v}, "non-edge inside X ∪ Y");
        continue;
      }
      Vertex s = su ? u : v, k = su ? v : u;
      const Role rs = su ? ru : rv, rk = su ? rv : ru;
      Need need = Need::kNonEdge;
      CombRule rule = CombRule::kCB10;
      std::string what = Name(rs.side, rs.index) + " / " + Name(rk.side, rk.index);
      if (rs.side == Side::kA) {
        const int i = rs.index;
        if (rk.side == Side::kX) {
          if (rk.index <= i) need = Need::kEdge, rule = CombRule::kCB4;
        } else if (i >= 1) {
          need = Need::kEdge, rule = CombRule::kCB5;
        }
      } else {
        const int i = rs.index;
        const int j = level_of(rk);
        if (j == 0) {
          // X_j with j >= 2: never adjacent to M.
        } else if (j == i) {
          const bool paired = matched.count({k, s}) > 0;
          const bool thick = dec.thick[i - 1];
          if (paired != thick) need = Need::kEdge, rule = CombRule::kCB6;
        } else if (j > i && j <= dec.l) {
          need = Need::kEdge, rule = CombRule::kCB7;
        } else if (j == dec.l + 1 && i <= dec.k0) {
          need = Need::kEdge, rule = CombRule::kCB8;
        }
      }
      if (need == Need::kEdge && !edge) {
        report(rule, {std::min(s, k), std::max(s, k)}, "missing edge " + what);
      } else if (need == Need::kNonEdge && edge) {
        report(rule, {std::min(s, k), std::max(s, k)}, "extra edge " + what);
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.rule, a.vertices, a.detail) <
           std::tie(b.rule, b.vertices, b.detail);
  });
  return out;
}

std::vector<std::string> StrictDefinitionGaps(const CombDecomposition& dec) {
  std::vector<std::string> gaps;
  std::string why;
  if (!ShapeOk(dec, &why)) return {"malformed: " + why};
  for (int i = 1; i <= dec.l; ++i) {
    const std::string lvl = std::to_string(i);
    const bool has_m = !dec.M_(i).empty();
    const bool has_y = !dec.Y_(i).empty();
    if (dec.thick[i - 1] && has_m && has_y) gaps.push_back("level " + lvl + " is thick");
    if (!has_m && i < dec.l) gaps.push_back("M_" + lvl + " is empty below level l");
    if (!has_y && i >= 2) gaps.push_back("Y_" + lvl + " is empty");
    if (!has_y && i == 1 && has_m) gaps.push_back("X_1 is empty while M_1 is not");
  }
  return gaps;
}

std::optional<Vertex> MirrorBreaker(const Graph& g, Vertex m, Vertex b,
                                    Vertex b2, Vertex m2) {
  if (!VerifyWitness(g, Witness{PatternKind::kP4, {m, b, b2, m2}})) {
    throw GraphError("(" + std::to_string(m) + "," + std::to_string(b) + "," +
                     std::to_string(b2) + "," + std::to_string(m2) +
                     ") is not an induced P4");
  }
  Bits outside(g.vertex_count());
  outside.set();
  for (Vertex v : {m, b, b2, m2}) outside.reset(v);
  const Bits diff = ((g.row(m) ^ g.row(m2)) | (g.row(b) ^ g.row(b2))) & outside;
  const auto first = diff.find_first();
  if (first == Bits::npos) return std::nullopt;
  return static_cast<Vertex>(first);
}

bool MirrorHolds(const Graph& g, Vertex m, Vertex b, Vertex b2, Vertex m2) {
  return !MirrorBreaker(g, m, b, b2, m2).has_value();
}

CombDecomposition ThresholdToComb(const ThresholdDecomposition& dec) {
  CombDecomposition c = CombDecomposition::Empty(dec.n, 1);
  c.A = dec.stable_levels;
  c.X = dec.clique_levels;
  c.k0 = 1;
  return c;
}

}  // namespace combrec
