#include "combrec/recognizer.h"

#include <algorithm>
#include <optional>
#include <unordered_map>

#include "combrec/layers.h"
#include "combrec/split_threshold.h"

namespace combrec {
namespace {

enum class SetKind { kA, kX, kM, kY };

// Where a vertex sits. Y_1 is reported as X_1.
struct Slot {
  SetKind kind;
  int index;
};

std::optional<Slot> Locate(const CombDecomposition& d, Vertex v) {
  for (int i = 0; i <= d.n; ++i) {
    if (d.A_(i).contains(v)) return Slot{SetKind::kA, i};
  }
  for (int j = 1; j <= d.n + 1; ++j) {
    if (d.X_(j).contains(v)) return Slot{SetKind::kX, j};
  }
  for (int i = 1; i <= d.l; ++i) {
    if (d.M_(i).contains(v)) return Slot{SetKind::kM, i};
  }
  for (int j = 2; j <= d.l + 2; ++j) {
    if (d.Y_(j).contains(v)) return Slot{SetKind::kY, j};
  }
  return std::nullopt;
}

VertexSet& SetAt(CombDecomposition& d, Slot s) {
  switch (s.kind) {
    case SetKind::kA: return d.A.at(s.index);
    case SetKind::kX: return d.X.at(s.index - 1);
    case SetKind::kM: return d.M.at(s.index - 1);
    case SetKind::kY: return d.MutableY(s.index);
  }
  throw InternalError("bad slot");
}

// Teeth level of a clique-side slot (X_1 is Y_1), or 0.
int LevelOf(Slot s) {
  if (s.kind == SetKind::kY) return s.index;
  if (s.kind == SetKind::kX && s.index == 1) return 1;
  return 0;
}

CombDecomposition MapBack(const CombDecomposition& d, const std::vector<Vertex>& to_original) {
  auto map_set = [&](const VertexSet& s) {
    std::vector<Vertex> out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(to_original[v]);
    return VertexSet(std::move(out));
  };
  CombDecomposition out = d;
  for (auto& s : out.A) s = map_set(s);
  for (auto& s : out.X) s = map_set(s);
  for (auto& s : out.M) s = map_set(s);
  for (auto& s : out.Y) s = map_set(s);
  for (auto& level : out.matchings) {
    for (auto& [y, m] : level) {
      y = to_original[y];
      m = to_original[m];
    }
  }
  out.Normalize();
  return out;
}

Witness MapBack(Witness w, const std::vector<Vertex>& to_original) {
  for (Vertex& v : w.vertices) v = to_original[v];
  return w;
}

// Inserts an empty level so that it becomes level p (2 <= p <= l+1).
void InsertLevel(CombDecomposition& d, int p) {
  d.M.insert(d.M.begin() + (p - 1), VertexSet{});
  d.matchings.insert(d.matchings.begin() + (p - 1), std::vector<MatchedPair>{});
  d.thick.insert(d.thick.begin() + (p - 1), false);
  d.Y.insert(d.Y.begin() + (p - 2), VertexSet{});
  if (d.k0 >= p) ++d.k0;
  ++d.l;
}

// The four path vertices a-b-b2-a2, with (a2, b2) the removed pair.
struct Path {
  Vertex a, b, b2, a2;
};

class Recognizer {
 public:
  explicit Recognizer(RecognizerStats& stats) : stats_(stats) {}

  // skip = number of smallest induced P4s to pass over; a result is absent
  // only when skip > 0 and there are not enough of them.
  std::optional<RecognitionResult> Run(const Graph& g, int skip, bool allow_next) {
    const SplitResult split = ComputeSplitPartition(g);
    if (const auto* w = std::get_if<Witness>(&split)) return *w;
    const auto& part = std::get<SplitPartition>(split);

    std::optional<Path> path;
    int seen = 0;
    ForEachInduced(g, PatternKind::kP4, [&](const std::vector<Vertex>& t) {
      if (t[0] > t[3]) return true;  // each path once
      if (seen++ < skip) return true;
      path = Path{t[0], t[1], t[2], t[3]};
      return false;
    });
    if (!path) {
      if (skip > 0) return std::nullopt;
      return Threshold(g, part);
    }

    if (auto x = MirrorBreaker(g, path->a, path->b, path->b2, path->a2)) {
      ++stats_.mirror_witnesses;
      return MirrorWitness(g, *path, *x);
    }

    VertexSet keep = AllVertices(g);
    keep.erase(path->a2);
    keep.erase(path->b2);
    const InducedSubgraph sub = Induce(g, keep);
    auto inner = Run(sub.graph, 0, allow_next);
    if (const auto* w = std::get_if<Witness>(&*inner)) return MapBack(*w, sub.to_original);
    const CombDecomposition prev =
        MapBack(std::get<CombDecomposition>(*inner), sub.to_original);

    if (auto d = Reinsert(g, prev, *path, allow_next)) return *d;
    if (auto w = FindAnyForbidden(g)) return *w;
    throw InternalError("unreachable: no reinsertion of path (" +
                        std::to_string(path->a) + "," + std::to_string(path->b) + "," +
                        std::to_string(path->b2) + "," + std::to_string(path->a2) +
                        ") validates on a graph without forbidden patterns");
  }

 private:
  RecognitionResult Threshold(const Graph& g, const SplitPartition& part) {
    const ThresholdResult t = DecomposeThreshold(g, part);
    if (std::holds_alternative<Witness>(t)) {
      throw InternalError("threshold construction returned a witness on a P4-free graph");
    }
    ++stats_.threshold_bases;
    CombDecomposition d = ThresholdToComb(std::get<ThresholdDecomposition>(t));
    if (!ValidateComb(g, d).empty()) {
      throw InternalError("threshold embedding failed validation");
    }
    return d;
  }

  // A vertex x telling a from a2 or b from b2 yields a C5, chair or co-chair
  // on {x, a, b, b2, a2}.
  Witness MirrorWitness(const Graph& g, const Path& p, Vertex x) {
    const InducedSubgraph five = Induce(g, VertexSet{x, p.a, p.b, p.b2, p.a2});
    static constexpr std::array<PatternKind, 3> kKinds = {
        PatternKind::kC5, PatternKind::kChair, PatternKind::kCoChair};
    if (auto w = FindFirst(five.graph, kKinds)) return MapBack(*w, five.to_original);
    if (auto w = FindAnyForbidden(g)) return *w;
    throw InternalError("mirror breaker " + std::to_string(x) +
                        " produced no forbidden pattern");
  }

  std::optional<CombDecomposition> Accept(const Graph& g, CombDecomposition d, Surgery s) {
    if (d.l >= 1 && d.Y.size() == static_cast<std::size_t>(d.l) + 1 &&
        d.Y_(d.l + 1).empty()) {
      d.k0 = d.l;
    }
    d.Normalize();
    if (!ValidateComb(g, d).empty()) return std::nullopt;
    ++stats_[s];
    return d;
  }

  std::optional<CombDecomposition> Reinsert(const Graph& g, const CombDecomposition& prev,
                                            const Path& p, bool allow_next) {
    const auto sa = Locate(prev, p.a);
    const auto sb = Locate(prev, p.b);
    if (!sa || !sb) throw InternalError("path vertex missing from sub-decomposition");

    // a' and b' take the sets of a and b; a pair on one level extends its
    // matching.
    {
      CombDecomposition d = prev;
      SetAt(d, *sa).insert(p.a2);
      SetAt(d, *sb).insert(p.b2);
      if (sa->kind == SetKind::kM && LevelOf(*sb) == sa->index) {
        d.matchings[sa->index - 1].emplace_back(p.b2, p.a2);
      }
      if (auto ok = Accept(g, std::move(d), Surgery::kSameSets)) return ok;
    }

    const int n = prev.n;
    if (n >= 1 && sa->kind == SetKind::kX && sa->index == n && sb->kind == SetKind::kA &&
        sb->index == n && prev.A_(n) == VertexSet{p.b} && prev.X_(n + 1).empty()) {
      CombDecomposition d = prev;
      d.X[n - 1].erase(p.a);
      d.X[n - 1].insert(p.b);
      d.A[n] = VertexSet{p.a};
      d.X[n] = VertexSet{p.b2};
      d.A.push_back(VertexSet{p.a2});
      d.X.push_back(VertexSet{});
      ++d.n;
      if (auto ok = Accept(g, std::move(d), Surgery::kThresholdSwap)) return ok;
    }

    if (n == 0 && LevelOf(*sa) == 1 && sb->kind == SetKind::kM && sb->index == 1 &&
        prev.X_(1) == VertexSet{p.a} && prev.M_(1) == VertexSet{p.b}) {
      CombDecomposition d = prev;
      d.X[0] = VertexSet{p.b, p.b2};
      d.M[0] = VertexSet{p.a, p.a2};
      d.matchings[0] = {{p.b, p.a}, {p.b2, p.a2}};
      d.thick[0] = false;
      if (auto ok = Accept(g, std::move(d), Surgery::kSingletonSwap)) return ok;
    }

    if (n == 0 && sa->kind == SetKind::kY && sa->index == 2 && sb->kind == SetKind::kM &&
        sb->index == 1 && prev.l >= 2 && prev.X_(1).size() == 1 &&
        prev.M_(1) == VertexSet{p.b} && prev.M_(2).empty()) {
      CombDecomposition d = prev;
      const Vertex c = *prev.X_(1).begin();
      d.M[0] = VertexSet{p.a, p.a2};
      d.X[0] = VertexSet{p.b, p.b2};
      d.Y[0].erase(p.a);
      d.Y[0].insert(c);
      d.matchings[0] = {{p.b, p.a}, {p.b2, p.a2}};
      d.thick[0] = false;
      if (auto ok = Accept(g, std::move(d), Surgery::kRotation)) return ok;
    }

    if (auto ok = Placement(g, prev, p)) return ok;
    if (auto ok = WindowSplice(g, prev, p)) return ok;

    if (allow_next) {
      std::optional<RecognitionResult> rerun;
      try {
        rerun = Run(g, 1, false);
      } catch (const InternalError&) {
        rerun.reset();
      }
      if (rerun && std::holds_alternative<CombDecomposition>(*rerun)) {
        ++stats_[Surgery::kNextP4];
        return std::get<CombDecomposition>(*rerun);
      }
    }
    return std::nullopt;
  }

  std::optional<CombDecomposition> Placement(const Graph& g, const CombDecomposition& prev,
                                             const Path& p) {
    std::vector<Slot> stable_slots, clique_slots;
    for (int i = 0; i <= prev.n; ++i) stable_slots.push_back({SetKind::kA, i});
    for (int i = 1; i <= prev.l; ++i) stable_slots.push_back({SetKind::kM, i});
    for (int j = 1; j <= prev.n + 1; ++j) clique_slots.push_back({SetKind::kX, j});
    for (int j = 2; j <= prev.l + 2; ++j) clique_slots.push_back({SetKind::kY, j});

    for (Slot sa : stable_slots) {
      for (Slot sb : clique_slots) {
        CombDecomposition d = prev;
        SetAt(d, sa).insert(p.a2);
        SetAt(d, sb).insert(p.b2);
        if (sa.kind == SetKind::kM && LevelOf(sb) == sa.index) {
          d.matchings[sa.index - 1].emplace_back(p.b2, p.a2);
        }
        if (auto ok = Accept(g, std::move(d), Surgery::kPlacement)) return ok;
      }
    }
    // A fresh one-pair level.
    for (int at = 2; at <= prev.l + 1; ++at) {
      CombDecomposition d = prev;
      InsertLevel(d, at);
      d.M[at - 1] = VertexSet{p.a2};
      d.MutableY(at) = VertexSet{p.b2};
      d.matchings[at - 1] = {{p.b2, p.a2}};
      if (auto ok = Accept(g, std::move(d), Surgery::kPlacement)) return ok;
    }
    return std::nullopt;
  }

  std::optional<CombDecomposition> WindowSplice(const Graph& g, const CombDecomposition& prev,
                                                const Path& p) {
    const std::size_t nv = static_cast<std::size_t>(g.vertex_count());
    const LayerSequence seq = LayersFromComb(prev);
    std::unordered_map<Vertex, std::size_t> layer_of;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      for (Vertex v : seq[i].stable) layer_of[v] = i;
      for (Vertex v : seq[i].clique) layer_of[v] = i;
    }
    const std::size_t la = layer_of.at(p.a);
    const std::size_t lb = layer_of.at(p.b);
    const VertexSet clique_side = prev.CliqueSide();

    auto attempt = [&](std::size_t lo, std::size_t hi,
                       bool fresh) -> std::optional<CombDecomposition> {
      std::vector<Vertex> members{p.a2, p.b2};
      for (std::size_t i = lo; i <= hi; ++i) {
        members.insert(members.end(), seq[i].stable.begin(), seq[i].stable.end());
        members.insert(members.end(), seq[i].clique.begin(), seq[i].clique.end());
      }
      const VertexSet window(std::move(members));
      Bits on_clique(nv);
      if (fresh) {
        const InducedSubgraph sub = Induce(g, window);
        const SplitResult split = ComputeSplitPartition(sub.graph);
        const auto* part = std::get_if<SplitPartition>(&split);
        if (part == nullptr) return std::nullopt;
        for (Vertex v : part->clique) on_clique.set(sub.to_original[v]);
      } else {
        for (Vertex v : window) {
          if (clique_side.contains(v)) on_clique.set(v);
        }
        on_clique.set(p.b2);
      }
      auto peeled = PeelLayers(g, window, on_clique);
      if (!peeled) return std::nullopt;
      LayerSequence spliced(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(lo));
      spliced.insert(spliced.end(), peeled->begin(), peeled->end());
      spliced.insert(spliced.end(), seq.begin() + static_cast<std::ptrdiff_t>(hi) + 1,
                     seq.end());
      return Accept(g, CombFromLayers(std::move(spliced)), Surgery::kWindowSplice);
    };

    const std::size_t hi = std::max(la, lb);
    const bool fixed_roles = !clique_side.contains(p.a) && clique_side.contains(p.b);
    if (fixed_roles) {
      if (auto ok = attempt(std::min(la, lb), hi, false)) return ok;
    }
    return attempt(0, hi, true);
  }

  RecognizerStats& stats_;
};

}  // namespace

std::string_view SurgeryName(Surgery s) {
  static constexpr std::string_view kNames[] = {
      "same_sets", "threshold_swap", "singleton_swap", "rotation",
      "placement", "window_splice",  "next_p4"};
  return kNames[static_cast<int>(s)];
}

RecognitionResult CombDecompose(const Graph& g, RecognizerStats* stats) {
  RecognizerStats local;
  Recognizer r(stats != nullptr ? *stats : local);
  return *r.Run(g, 0, true);
}

bool IsComb(const Graph& g) {
  return std::holds_alternative<CombDecomposition>(CombDecompose(g));
}

}  // namespace combrec
