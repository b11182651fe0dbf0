#include "combrec/corpus.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "combrec/patterns.h"

namespace combrec {
namespace {

std::string Join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& s : lines) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

// Portable draws; the standard distributions are implementation-defined.
std::uint64_t Below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }
int Between(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(Below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}
double Unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<Vertex> Permutation(std::size_t n, std::uint64_t seed) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[Below(rng, i)]);
  }
  return perm;
}

}  // namespace

std::vector<std::string> CheckParams(const CombParams& p) {
  std::vector<std::string> bad;
  if (p.n < 0) bad.push_back("n must be nonnegative");
  if (p.l < 1) bad.push_back("l must be at least 1");
  if (!bad.empty()) return bad;
  if (p.k0 < 1 || p.k0 > p.l) bad.push_back("k0 must lie in [1, l]");
  const auto n1 = static_cast<std::size_t>(p.n) + 1;
  const auto l = static_cast<std::size_t>(p.l);
  if (p.a.size() != n1) bad.push_back("a needs n+1 sizes (A_0..A_n)");
  if (p.x.size() != n1) bad.push_back("x needs n+1 sizes (X_1..X_{n+1})");
  if (p.m.size() != l) bad.push_back("m needs l sizes (M_1..M_l)");
  if (p.y.size() != l + 1) bad.push_back("y needs l+1 sizes (Y_2..Y_{l+2})");
  if (!p.thick.empty() && p.thick.size() != l) bad.push_back("thick needs l flags or none");
  if (!bad.empty()) return bad;

  long long total = 0;
  for (const auto* sizes : {&p.a, &p.x, &p.m, &p.y}) {
    for (int s : *sizes) {
      if (s < 0) bad.push_back("set sizes must be nonnegative");
      total += s;
    }
  }
  if (total > kMaxVertices) bad.push_back("more than " + std::to_string(kMaxVertices) + " vertices");
  for (int i = 1; i <= p.n; ++i) {
    if (p.a[i] == 0) bad.push_back("A_" + std::to_string(i) + " must be nonempty");
    if (p.x[i - 1] == 0) bad.push_back("X_" + std::to_string(i) + " must be nonempty");
  }
  for (int i = 1; i <= p.l; ++i) {
    const int m = p.m[i - 1];
    const int y = i == 1 ? p.x[0] : p.y[i - 2];
    if (m > 0 && y > 0 && m != y) {
      bad.push_back("level " + std::to_string(i) + ": |Y_" + std::to_string(i) +
                    "| must equal |M_" + std::to_string(i) + "|");
    }
    if (p.l >= 2 && i < p.l && m == 0 && y == 0) {
      bad.push_back("level " + std::to_string(i) + " must be nonempty");
    }
  }
  return bad;
}

GeneratedComb GenerateComb(const CombParams& p) {
  if (auto bad = CheckParams(p); !bad.empty()) throw std::invalid_argument(Join(bad));

  Vertex next = 0;
  auto block = [&](int size) {
    std::vector<Vertex> v(static_cast<std::size_t>(size));
    std::iota(v.begin(), v.end(), next);
    next += size;
    return v;
  };
  std::vector<std::vector<Vertex>> a, x, m, y;
  for (int s : p.a) a.push_back(block(s));
  for (int s : p.x) x.push_back(block(s));
  for (int s : p.m) m.push_back(block(s));
  for (int s : p.y) y.push_back(block(s));
  auto level_y = [&](int i) -> const std::vector<Vertex>& { return i == 1 ? x[0] : y[i - 2]; };
  auto is_thick = [&](int i) { return !p.thick.empty() && p.thick[i - 1]; };

  std::vector<Edge> edges;
  auto complete = [&](const std::vector<Vertex>& s, const std::vector<Vertex>& t) {
    for (Vertex u : s) {
      for (Vertex v : t) edges.emplace_back(u, v);
    }
  };
  std::vector<Vertex> clique;
  for (const auto& s : x) clique.insert(clique.end(), s.begin(), s.end());
  for (const auto& s : y) clique.insert(clique.end(), s.begin(), s.end());
  for (std::size_t i = 0; i < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) edges.emplace_back(clique[i], clique[j]);
  }
  for (int i = 1; i <= p.n; ++i) {
    for (int j = 1; j <= i; ++j) complete(a[i], x[j - 1]);
    for (const auto& s : y) complete(a[i], s);
  }
  for (int i = 1; i <= p.l; ++i) {
    const auto& mi = m[i - 1];
    const auto& yi = level_y(i);
    if (!mi.empty() && !yi.empty()) {
      for (std::size_t r = 0; r < mi.size(); ++r) {
        for (std::size_t c = 0; c < yi.size(); ++c) {
          if ((r == c) != is_thick(i)) edges.emplace_back(mi[r], yi[c]);
        }
      }
    }
    for (int j = i + 1; j <= p.l; ++j) complete(mi, level_y(j));
    if (i <= p.k0) complete(mi, y[p.l - 1]);
  }

  const std::vector<Vertex> perm = Permutation(static_cast<std::size_t>(next), p.seed);
  for (auto& [u, v] : edges) {
    u = perm[u];
    v = perm[v];
  }
  auto relabel = [&](const std::vector<Vertex>& s) {
    std::vector<Vertex> out;
    for (Vertex v : s) out.push_back(perm[v]);
    return VertexSet(std::move(out));
  };

  GeneratedComb out{BuildGraph(next, edges), CombDecomposition::Empty(p.n, p.l)};
  CombDecomposition& d = out.decomposition;
  d.k0 = p.k0;
  for (int i = 0; i <= p.n; ++i) {
    d.A[i] = relabel(a[i]);
    d.X[i] = relabel(x[i]);
  }
  for (int i = 1; i <= p.l; ++i) {
    d.M[i - 1] = relabel(m[i - 1]);
    d.thick[i - 1] = is_thick(i);
    const auto& mi = m[i - 1];
    const auto& yi = level_y(i);
    if (!mi.empty() && !yi.empty()) {
      for (std::size_t r = 0; r < mi.size(); ++r) {
        d.matchings[i - 1].emplace_back(perm[yi[r]], perm[mi[r]]);
      }
    }
  }
  for (int j = 0; j <= p.l; ++j) d.Y[j] = relabel(y[j]);
  d.Normalize();
  return out;
}

CombParams RandomCombParams(std::mt19937_64& rng, int max_vertices) {
  if (max_vertices < 0) throw std::invalid_argument("max_vertices must be nonnegative");
  for (;;) {
    CombParams p;
    p.n = Between(rng, 0, 4);
    p.l = Between(rng, 1, 5);
    p.k0 = Between(rng, 1, p.l);
    p.seed = rng();
    const int scale = std::max(1, max_vertices / (p.n + p.l + 2));
    auto size = [&](int lo) { return Between(rng, lo, std::max(lo, scale)); };

    p.a.push_back(size(0));
    for (int i = 1; i <= p.n; ++i) p.a.push_back(size(1));
    for (int i = 1; i <= p.n; ++i) p.x.push_back(size(1));
    p.x.push_back(size(0));
    if (p.n == 0) p.x[0] = 0;
    p.m.assign(p.l, 0);
    p.y.assign(p.l + 1, 0);
    p.thick.assign(p.l, false);
    for (int i = 1; i <= p.l; ++i) {
      int& yi = i == 1 ? p.x[0] : p.y[i - 2];
      // 0: two-sided, 1: stable only, 2: clique only, 3: empty (top level)
      int shape = static_cast<int>(Below(rng, i == p.l ? 4 : 3));
      if (i == 1 && p.n >= 1) shape = Below(rng, 2) == 0 ? 0 : 2;
      switch (shape) {
        case 0: {
          const int pairs = yi > 0 ? yi : size(1);
          yi = pairs;
          p.m[i - 1] = pairs;
          p.thick[i - 1] = Below(rng, 3) == 0;
          break;
        }
        case 1: p.m[i - 1] = size(1); break;
        case 2: if (yi == 0) yi = size(1); break;
        default: break;
      }
    }
    p.y[p.l - 1] = size(0);
    p.y[p.l] = size(0);

    int total = 0;
    for (const auto* s : {&p.a, &p.x, &p.m, &p.y}) total = std::accumulate(s->begin(), s->end(), total);
    if (total <= max_vertices && CheckParams(p).empty()) return p;
  }
}

Graph RandomGraph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (Unit(rng) < p) edges.emplace_back(u, v);
    }
  }
  return BuildGraph(n, edges);
}

CanonicalForm Canonicalize(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxCanonicalOrder) {
    throw std::invalid_argument("canonical code needs at most " +
                                std::to_string(kMaxCanonicalOrder) + " vertices");
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  std::vector<char> best, cur;
  cur.reserve(bits);
  bool have_best = false;
  std::uint64_t count = 0;
  std::vector<Vertex> at(n);
  std::vector<bool> used(n, false);

  // less: the current prefix is below best. It stops being true once best is
  // replaced, since the new best extends the current prefix.
  std::uint64_t version = 0;
  auto search = [&](auto&& self, int depth, bool less) -> void {
    if (depth == n) {
      if (!have_best || less) {
        best = cur;
        have_best = true;
        ++version;
        count = 1;
      } else {
        ++count;
      }
      return;
    }
    const std::uint64_t entry = version;
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      const std::size_t mark = cur.size();
      bool now_less = !have_best || (less && version == entry);
      bool prune = false;
      for (int i = 0; i < depth; ++i) {
        const char bit = g.has_edge(at[i], v) ? 1 : 0;
        cur.push_back(bit);
        if (!now_less) {
          const char ref = best[cur.size() - 1];
          if (bit > ref) {
            prune = true;
            break;
          }
          if (bit < ref) now_less = true;
        }
      }
      if (!prune) {
        used[v] = true;
        at[depth] = v;
        self(self, depth + 1, now_less);
        used[v] = false;
      }
      cur.resize(mark);
    }
  };
  search(search, 0, false);

  CanonicalForm out;
  out.automorphisms = count;
  out.code.push_back(static_cast<char>(n));
  for (std::size_t k = 0; k < bits; k += 8) {
    unsigned char byte = 0;
    for (std::size_t b = 0; b < 8; ++b) {
      byte = static_cast<unsigned char>(byte << 1);
      if (k + b < bits && best[k + b]) byte |= 1;
    }
    out.code.push_back(static_cast<char>(byte));
  }
  return out;
}

std::string CanonicalCode(const Graph& g) { return Canonicalize(g).code; }

void EnumerateGraphs(int n, bool up_to_iso, const std::function<void(const Graph&)>& visit) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    throw std::invalid_argument("enumeration supports 0 <= n <= " +
                                std::to_string(kMaxEnumerationOrder));
  }
  if (up_to_iso) {
    for (const Graph& g : GraphsUpToIso(n)) visit(g);
    return;
  }
  std::vector<Edge> pairs;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  const std::size_t k = pairs.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<Bits> rows(static_cast<std::size_t>(n), Bits(static_cast<std::size_t>(n)));
    for (std::size_t b = 0; b < k; ++b) {
      if ((mask >> (k - 1 - b)) & 1) {
        rows[pairs[b].first].set(pairs[b].second);
        rows[pairs[b].second].set(pairs[b].first);
      }
    }
    visit(GraphRows::Adopt(std::move(rows)));
  }
}

std::vector<Graph> GraphsUpToIso(int n) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    throw std::invalid_argument("enumeration supports 0 <= n <= " +
                                std::to_string(kMaxEnumerationOrder));
  }
  std::vector<Graph> reps{Graph(0)};
  for (int order = 1; order <= n; ++order) {
    std::map<std::string, Graph> seen;
    const auto un = static_cast<std::size_t>(order);
    for (const Graph& base : reps) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (order - 1)); ++mask) {
        std::vector<Bits> rows(un, Bits(un));
        for (Vertex u = 0; u + 1 < order; ++u) {
          for (Vertex v = u + 1; v + 1 < order; ++v) {
            if (base.has_edge(u, v)) {
              rows[u].set(v);
              rows[v].set(u);
            }
          }
          if ((mask >> u) & 1) {
            rows[u].set(un - 1);
            rows[un - 1].set(u);
          }
        }
        Graph g = GraphRows::Adopt(std::move(rows));
        seen.try_emplace(CanonicalCode(g), std::move(g));
      }
    }
    reps.clear();
    for (auto& [code, g] : seen) reps.push_back(std::move(g));
  }
  return reps;
}

std::vector<CensusRow> Census(int max_n) {
  if (max_n < 0 || max_n > 7) throw std::invalid_argument("census supports max_n <= 7");
  std::vector<CensusRow> rows;
  for (int n = 1; n <= max_n; ++n) {
    CensusRow row;
    row.n = n;
    for (const Graph& g : GraphsUpToIso(n)) {
      ++row.total;
      if (FindFirst(g, kSplitObstructions)) continue;
      ++row.split;
      if (!FindInduced(g, PatternKind::kP4)) ++row.threshold;
      if (!FindAnyForbidden(g)) ++row.comb;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string CensusCsv(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << "n,total,split,threshold,comb\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.total << ',' << r.split << ',' << r.threshold << ',' << r.comb << '\n';
  }
  return out.str();
}

namespace {

enum class Side { kA, kX, kM, kY };

struct Role {
  Side side;
  int index;  // Y_1 is written as X_1
};

struct Shape {
  int n, l, k0;
};

// Adjacency forced between two roles: 1 edge, 0 non-edge, -1 free (a level's
// own M/Y pairs, decided by its matching).
int Forced(const Shape& s, Role u, Role v) {
  const bool su = u.side == Side::kA || u.side == Side::kM;
  const bool sv = v.side == Side::kA || v.side == Side::kM;
  if (su && sv) return 0;
  if (!su && !sv) return 1;
  const Role st = su ? u : v;
  const Role cl = su ? v : u;
  const int ylevel = cl.side == Side::kY ? cl.index : (cl.index == 1 ? 1 : 0);
  if (st.side == Side::kA) {
    if (st.index == 0) return 0;
    if (cl.side == Side::kX) return cl.index <= st.index ? 1 : 0;
    return 1;
  }
  const int i = st.index;
  if (ylevel == 0) return 0;
  if (ylevel == i) return -1;
  if (ylevel > i && ylevel <= s.l) return 1;
  if (ylevel == s.l + 1) return i <= s.k0 ? 1 : 0;
  return 0;
}

class Labeler {
 public:
  Labeler(const Graph& g, bool allow_extensions) : g_(g), allow_(allow_extensions) {}

  std::optional<CombDecomposition> Solve() {
    const int nv = g_.vertex_count();
    for (int n = 0; 2 * n <= nv; ++n) {
      for (int l = 1; l <= nv + 1; ++l) {
        for (int k0 = l; k0 >= 1; --k0) {
          shape_ = {n, l, k0};
          roles_.clear();
          for (int i = 0; i <= n; ++i) roles_.push_back({Side::kA, i});
          for (int j = 1; j <= n + 1; ++j) roles_.push_back({Side::kX, j});
          for (int i = 1; i <= l; ++i) roles_.push_back({Side::kM, i});
          for (int j = 2; j <= l + 2; ++j) roles_.push_back({Side::kY, j});
          assigned_.assign(nv, 0);
          if (Assign(0)) return found_;
        }
      }
    }
    return std::nullopt;
  }

 private:
  bool Assign(int v) {
    if (v == g_.vertex_count()) return Finish();
    for (std::size_t r = 0; r < roles_.size(); ++r) {
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        const int f = Forced(shape_, roles_[assigned_[u]], roles_[r]);
        if (f >= 0 && f != (g_.has_edge(u, v) ? 1 : 0)) ok = false;
      }
      if (!ok) continue;
      assigned_[v] = r;
      if (Assign(v + 1)) return true;
    }
    return false;
  }

  bool Finish() {
    CombDecomposition d = CombDecomposition::Empty(shape_.n, shape_.l);
    d.k0 = shape_.k0;
    for (int v = 0; v < g_.vertex_count(); ++v) {
      const Role r = roles_[assigned_[v]];
      switch (r.side) {
        case Side::kA: d.A[r.index].insert(v); break;
        case Side::kX: d.X[r.index - 1].insert(v); break;
        case Side::kM: d.M[r.index - 1].insert(v); break;
        case Side::kY: d.Y[r.index - 2].insert(v); break;
      }
    }
    // Matchings follow from the graph: edges on a thin level, non-edges on a
    // thick one.
    for (int i = 1; i <= d.l; ++i) {
      const VertexSet& mi = d.M_(i);
      const VertexSet& yi = d.Y_(i);
      if (mi.empty() || yi.empty()) continue;
      bool placed = false;
      for (bool thick : {false, true}) {
        std::vector<MatchedPair> pairs;
        for (Vertex y : yi) {
          for (Vertex m : mi) {
            if (g_.has_edge(y, m) != thick) pairs.emplace_back(y, m);
          }
        }
        if (pairs.size() == mi.size() && mi.size() == yi.size()) {
          d.matchings[i - 1] = std::move(pairs);
          d.thick[i - 1] = thick;
          placed = true;
          break;
        }
      }
      if (!placed) return false;
    }
    d.Normalize();
    if (!ValidateComb(g_, d).empty()) return false;
    if (!allow_ && !StrictDefinitionGaps(d).empty()) return false;
    found_ = std::move(d);
    return true;
  }

  const Graph& g_;
  bool allow_;
  Shape shape_{};
  std::vector<Role> roles_;
  std::vector<std::size_t> assigned_;
  CombDecomposition found_;
};

}  // namespace

std::optional<CombDecomposition> BruteForceCombLabel(const Graph& g, int limit_n,
                                                     bool allow_extensions) {
  if (g.vertex_count() > limit_n) {
    throw std::invalid_argument("brute-force labeling limited to " + std::to_string(limit_n) +
                                " vertices");
  }
  return Labeler(g, allow_extensions).Solve();
}

}  // namespace combrec
