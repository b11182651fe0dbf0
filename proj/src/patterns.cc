#include "combrec/patterns.h"

#include <algorithm>

namespace combrec {
namespace {

constexpr Edge kP4Edges[] = {{0, 1}, {1, 2}, {2, 3}};
constexpr Edge kC4Edges[] = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
constexpr Edge kCoC4Edges[] = {{0, 1}, {2, 3}};
constexpr Edge kC5Edges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
constexpr Edge kChairEdges[] = {{0, 1}, {1, 2}, {2, 3}, {2, 4}};
constexpr Edge kCoChairEdges[] = {{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {3, 4}};

struct PatternTable {
  int order;
  // adjacent[i][j] for pattern vertices.
  std::array<std::array<bool, 5>, 5> adjacent{};
};

PatternTable MakeTable(PatternKind kind) {
  PatternTable t;
  t.order = PatternOrder(kind);
  for (const auto& [u, v] : PatternEdges(kind)) {
    t.adjacent[u][v] = true;
    t.adjacent[v][u] = true;
  }
  return t;
}

const PatternTable& Table(PatternKind kind) {
  static const std::array<PatternTable, 6> tables = [] {
    std::array<PatternTable, 6> out;
    for (PatternKind k : kAllPatterns) out[static_cast<int>(k)] = MakeTable(k);
    return out;
  }();
  return tables[static_cast<int>(kind)];
}

}  // namespace

std::string_view PatternName(PatternKind kind) {
  switch (kind) {
    case PatternKind::kP4: return "P4";
    case PatternKind::kC4: return "C4";
    case PatternKind::kCoC4: return "CO_C4";
    case PatternKind::kC5: return "C5";
    case PatternKind::kChair: return "CHAIR";
    case PatternKind::kCoChair: return "CO_CHAIR";
  }
  return "?";
}

std::optional<PatternKind> PatternFromName(std::string_view name) {
  for (PatternKind k : kAllPatterns) {
    if (PatternName(k) == name) return k;
  }
  return std::nullopt;
}

int PatternOrder(PatternKind kind) {
  switch (kind) {
    case PatternKind::kP4:
    case PatternKind::kC4:
    case PatternKind::kCoC4:
      return 4;
    default:
      return 5;
  }
}

std::span<const Edge> PatternEdges(PatternKind kind) {
  switch (kind) {
    case PatternKind::kP4: return kP4Edges;
    case PatternKind::kC4: return kC4Edges;
    case PatternKind::kCoC4: return kCoC4Edges;
    case PatternKind::kC5: return kC5Edges;
    case PatternKind::kChair: return kChairEdges;
    case PatternKind::kCoChair: return kCoChairEdges;
  }
  return {};
}

Graph PatternGraph(PatternKind kind) {
  return Graph(PatternOrder(kind), PatternEdges(kind));
}

PatternKind ComplementKind(PatternKind kind) {
  switch (kind) {
    case PatternKind::kC4: return PatternKind::kCoC4;
    case PatternKind::kCoC4: return PatternKind::kC4;
    case PatternKind::kChair: return PatternKind::kCoChair;
    case PatternKind::kCoChair: return PatternKind::kChair;
    default: return kind;  // P4 and C5 are self-complementary
  }
}

namespace internal {

bool SearchInduced(const Graph& g, PatternKind kind,
                   bool (*callback)(const std::vector<Vertex>&, void*),
                   void* context) {
  const PatternTable& t = Table(kind);
  const int n = g.vertex_count();
  if (n < t.order) return true;

  std::vector<Vertex> tuple(t.order, -1);
  std::vector<Bits> candidates(t.order, Bits(n));
  Bits all(n);
  all.set();

  // candidates[p] holds the vertices still eligible for position p given
  // tuple[0..p-1].
  auto fill = [&](int p) {
    Bits c = all;
    for (int i = 0; i < p; ++i) {
      const Bits& r = g.row(tuple[i]);
      if (t.adjacent[i][p]) {
        c &= r;
      } else {
        c -= r;
      }
      c.reset(tuple[i]);
    }
    candidates[p] = std::move(c);
  };

  int p = 0;
  fill(0);
  std::vector<std::size_t> cursor(t.order, Bits::npos);
  while (p >= 0) {
    std::size_t next = cursor[p] == Bits::npos ? candidates[p].find_first()
                                               : candidates[p].find_next(cursor[p]);
    if (next == Bits::npos) {
      cursor[p] = Bits::npos;
      --p;
      continue;
    }
    cursor[p] = next;
    tuple[p] = static_cast<Vertex>(next);
    if (p + 1 == t.order) {
      if (!callback(tuple, context)) return false;
      continue;
    }
    ++p;
    fill(p);
    cursor[p] = Bits::npos;
  }
  return true;
}

}  // namespace internal

std::optional<Witness> FindInduced(const Graph& g, PatternKind kind) {
  std::optional<Witness> found;
  ForEachInduced(g, kind, [&](const std::vector<Vertex>& t) {
    found = Witness{kind, t};
    return false;
  });
  return found;
}

std::optional<Witness> FindFirst(const Graph& g,
                                 std::span<const PatternKind> order) {
  for (PatternKind k : order) {
    if (auto w = FindInduced(g, k)) return w;
  }
  return std::nullopt;
}

std::optional<Witness> FindAnyForbidden(const Graph& g) {
  return FindFirst(g, kForbiddenPatterns);
}

bool VerifyWitness(const Graph& g, const Witness& w) {
  const PatternTable& t = Table(w.kind);
  if (static_cast<int>(w.vertices.size()) != t.order) return false;
  const int n = g.vertex_count();
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    if (w.vertices[i] < 0 || w.vertices[i] >= n) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (w.vertices[i] == w.vertices[j]) return false;
    }
  }
  for (int i = 0; i < t.order; ++i) {
    for (int j = i + 1; j < t.order; ++j) {
      if (g.has_edge(w.vertices[i], w.vertices[j]) != t.adjacent[i][j]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace combrec
