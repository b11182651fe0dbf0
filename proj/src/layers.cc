#include "combrec/layers.h"

#include <algorithm>

namespace combrec {
namespace {

bool IsSpider(LayerKind k) { return k == LayerKind::kThin || k == LayerKind::kThick; }

Layer Isolated(std::vector<Vertex> s) { return {LayerKind::kIsolated, std::move(s), {}}; }
Layer Universal(std::vector<Vertex> k) { return {LayerKind::kUniversal, {}, std::move(k)}; }

std::vector<Vertex> Members(const Bits& b) { return VertexSet::FromBits(b).members(); }

// One level of a comb (M_i, Y_i) as a layer.
std::optional<Layer> LevelLayer(const CombDecomposition& d, int i) {
  const VertexSet& m = d.M_(i);
  const VertexSet& y = d.Y_(i);
  if (m.empty() && y.empty()) return std::nullopt;
  if (y.empty()) return Isolated(m.members());
  if (m.empty()) return Universal(y.members());
  Layer layer{d.thick[i - 1] ? LayerKind::kThick : LayerKind::kThin, {}, {}};
  auto pairs = d.matchings[i - 1];
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [yv, mv] : pairs) {
    layer.clique.push_back(yv);
    layer.stable.push_back(mv);
  }
  return layer;
}

// Reads a run of isolated/universal layers (innermost first) as threshold
// levels: returns A_1..A_n innermost-last and X_2..X_{n+1}, with the outermost
// layer required to be isolated (or the run empty).
void ReadThresholdCore(const LayerSequence& core, CombDecomposition& d) {
  int n = 0;
  for (const auto& layer : core) n += layer.kind == LayerKind::kIsolated;
  d.n = n;
  d.A.assign(n + 1, {});
  d.X.assign(n + 1, {});
  // Walk outwards-in: A_1, X_2, A_2, X_3, ...
  int a_index = 0;
  for (auto it = core.rbegin(); it != core.rend(); ++it) {
    if (it->kind == LayerKind::kIsolated) {
      ++a_index;
      d.A[a_index] = VertexSet(it->stable);
    } else {
      d.X[a_index] = VertexSet(it->clique);  // X_{a_index+1}
    }
  }
}

}  // namespace

LayerSequence NormalizeLayers(LayerSequence seq) {
  LayerSequence expanded;
  for (auto& layer : seq) {
    if (layer.stable.empty() && layer.clique.empty()) continue;
    if (IsSpider(layer.kind)) {
      if (layer.stable.empty()) {
        expanded.push_back(Universal(layer.clique));
        continue;
      }
      if (layer.clique.empty()) {
        expanded.push_back(Isolated(layer.stable));
        continue;
      }
      if (layer.stable.size() == 1) {
        if (layer.kind == LayerKind::kThin) {
          expanded.push_back(Isolated(layer.stable));
          expanded.push_back(Universal(layer.clique));
        } else {
          expanded.push_back(Universal(layer.clique));
          expanded.push_back(Isolated(layer.stable));
        }
        continue;
      }
      if (layer.stable.size() == 2 && layer.kind == LayerKind::kThick) {
        layer.kind = LayerKind::kThin;
        std::swap(layer.clique[0], layer.clique[1]);
      }
    }
    expanded.push_back(std::move(layer));
  }
  LayerSequence out;
  for (auto& layer : expanded) {
    if (!out.empty() && !IsSpider(layer.kind) && out.back().kind == layer.kind) {
      auto& dst = layer.kind == LayerKind::kIsolated ? out.back().stable : out.back().clique;
      const auto& src = layer.kind == LayerKind::kIsolated ? layer.stable : layer.clique;
      dst.insert(dst.end(), src.begin(), src.end());
      std::sort(dst.begin(), dst.end());
      continue;
    }
    if (!IsSpider(layer.kind)) {
      std::sort(layer.stable.begin(), layer.stable.end());
      std::sort(layer.clique.begin(), layer.clique.end());
    }
    out.push_back(std::move(layer));
  }
  return out;
}

LayerSequence LayersFromComb(const CombDecomposition& d) {
  LayerSequence seq;
  auto push = [&](std::optional<Layer> layer) {
    if (layer && !(layer->stable.empty() && layer->clique.empty())) {
      seq.push_back(std::move(*layer));
    }
  };
  // Core, innermost first: X_{n+1}, A_n, X_n, ..., X_2, A_1. X_1 belongs to
  // level 1.
  if (d.n >= 1) push(Universal(d.X_(d.n + 1).members()));
  for (int i = d.n; i >= 1; --i) {
    push(Isolated(d.A_(i).members()));
    if (i >= 2) push(Universal(d.X_(i).members()));
  }
  push(Universal(d.Y_(d.l + 2).members()));
  for (int i = 1; i <= d.l; ++i) {
    push(LevelLayer(d, i));
    if (i == d.k0) push(Universal(d.Y_(d.l + 1).members()));
  }
  push(Isolated(d.A_(0).members()));
  return seq;
}

CombDecomposition CombFromLayers(LayerSequence seq) {
  seq = NormalizeLayers(std::move(seq));
  CombDecomposition d;

  VertexSet a0;
  if (!seq.empty() && seq.back().kind == LayerKind::kIsolated) {
    a0 = VertexSet(seq.back().stable);
    seq.pop_back();
  }
  const auto first_spider = static_cast<std::size_t>(
      std::find_if(seq.begin(), seq.end(),
                   [](const Layer& l) { return IsSpider(l.kind); }) -
      seq.begin());

  // Core = layers inside the first spider (or everything). Its outermost
  // universal layer is X_1 for a threshold graph and Y_{l+2} otherwise.
  LayerSequence core(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(first_spider));
  VertexSet outer_clique;
  if (!core.empty() && core.back().kind == LayerKind::kUniversal) {
    outer_clique = VertexSet(core.back().clique);
    core.pop_back();
  }
  ReadThresholdCore(core, d);
  d.A[0] = a0;

  std::vector<Layer> levels;
  for (std::size_t i = first_spider; i < seq.size(); ++i) {
    // A single stable vertex followed by a single clique vertex is a thin
    // one-pair level.
    if (i + 1 < seq.size() && seq[i].kind == LayerKind::kIsolated &&
        seq[i + 1].kind == LayerKind::kUniversal && seq[i].stable.size() == 1 &&
        seq[i + 1].clique.size() == 1) {
      levels.push_back({LayerKind::kThin, seq[i].stable, seq[i + 1].clique});
      ++i;
      continue;
    }
    levels.push_back(seq[i]);
  }
  if (levels.empty()) {
    // Threshold graph.
    levels.push_back(Universal(outer_clique.members()));
    outer_clique = {};
  }

  // One clique-only level strictly between teeth can be carried by Y_{l+1}.
  std::optional<Layer> lifted;
  int lifted_below = 0;
  for (std::size_t i = 1; i + 1 < levels.size(); ++i) {
    if (levels[i].kind == LayerKind::kUniversal) {
      lifted = levels[i];
      lifted_below = static_cast<int>(i);
      levels.erase(levels.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }

  const int l = static_cast<int>(levels.size());
  d.l = l;
  d.M.assign(l, {});
  d.Y.assign(l + 1, {});
  d.matchings.assign(l, {});
  d.thick.assign(l, false);
  for (int i = 1; i <= l; ++i) {
    const Layer& layer = levels[i - 1];
    d.M[i - 1] = VertexSet(layer.stable);
    d.MutableY(i) = VertexSet(layer.clique);
    d.thick[i - 1] = layer.kind == LayerKind::kThick;
    if (IsSpider(layer.kind)) {
      for (std::size_t p = 0; p < layer.stable.size(); ++p) {
        d.matchings[i - 1].emplace_back(layer.clique[p], layer.stable[p]);
      }
    }
  }
  d.Y[l] = outer_clique;  // Y_{l+2}
  if (lifted) {
    d.Y[l - 1] = VertexSet(lifted->clique);  // Y_{l+1}
    d.k0 = lifted_below;
  } else {
    d.k0 = l;
  }
  d.Normalize();
  return d;
}

std::optional<LayerSequence> PeelLayers(const Graph& g, const VertexSet& vertices,
                                        const Bits& on_clique_side) {
  const std::size_t n = static_cast<std::size_t>(g.vertex_count());
  Bits rem = vertices.ToBits(n);
  LayerSequence outer_first;

  auto neighbors = [&](std::size_t v) { return g.row(static_cast<Vertex>(v)) & rem; };

  while (rem.any()) {
    Bits iso(n), uni(n), deg1(n);
    for (auto v = rem.find_first(); v != Bits::npos; v = rem.find_next(v)) {
      const Bits nb = neighbors(v);
      if (on_clique_side.test(v)) {
        Bits others = rem;
        others.reset(v);
        if (others == nb) uni.set(v);
      } else {
        const auto c = nb.count();
        if (c == 0) iso.set(v);
        if (c == 1) deg1.set(v);
      }
    }
    if (iso.any()) {
      outer_first.push_back(Isolated(Members(iso)));
      rem -= iso;
      continue;
    }
    if (uni.any()) {
      outer_first.push_back(Universal(Members(uni)));
      rem -= uni;
      continue;
    }

    auto try_spider = [&](LayerKind kind) -> bool {
      Layer layer{kind, {}, {}};
      Bits s_side(n), k_side(n);
      if (kind == LayerKind::kThin) {
        if (deg1.count() < 2) return false;
        for (auto v = deg1.find_first(); v != Bits::npos; v = deg1.find_next(v)) {
          const auto p = neighbors(v).find_first();
          if (!on_clique_side.test(p) || k_side.test(p)) return false;
          layer.stable.push_back(static_cast<Vertex>(v));
          layer.clique.push_back(static_cast<Vertex>(p));
          s_side.set(v);
          k_side.set(p);
        }
      } else {
        for (auto v = rem.find_first(); v != Bits::npos; v = rem.find_next(v)) {
          if (!on_clique_side.test(v)) continue;
          Bits missing = rem - neighbors(v);
          missing.reset(v);
          if (missing.count() != 1) continue;
          const auto q = missing.find_first();
          if (on_clique_side.test(q) || s_side.test(q)) return false;
          layer.clique.push_back(static_cast<Vertex>(v));
          layer.stable.push_back(static_cast<Vertex>(q));
          s_side.set(q);
          k_side.set(v);
        }
        if (layer.stable.size() < 2) return false;
      }
      for (std::size_t p = 0; p < layer.stable.size(); ++p) {
        const auto s = static_cast<std::size_t>(layer.stable[p]);
        const auto k = static_cast<std::size_t>(layer.clique[p]);
        Bits expect_s(n);
        Bits expect_k = rem;
        expect_k.reset(k);
        if (kind == LayerKind::kThin) {
          // s sees only k; k sees everything left except the other legs.
          expect_s.set(k);
          expect_k -= s_side;
          expect_k.set(s);
        } else {
          // s sees the other clique legs; k sees everything left except s.
          expect_s = k_side;
          expect_s.reset(k);
          expect_k.reset(s);
        }
        if (neighbors(s) != expect_s || neighbors(k) != expect_k) return false;
      }
      outer_first.push_back(std::move(layer));
      rem -= s_side;
      rem -= k_side;
      return true;
    };
    if (try_spider(LayerKind::kThin) || try_spider(LayerKind::kThick)) continue;
    return std::nullopt;
  }
  std::reverse(outer_first.begin(), outer_first.end());
  return outer_first;
}

}  // namespace combrec
