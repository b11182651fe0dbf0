#ifndef COMBREC_PATTERNS_H_
#define COMBREC_PATTERNS_H_

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <type_traits>
#include <vector>

#include "combrec/graph.h"

namespace combrec {

// The six fixed induced patterns. Vertex orderings are fixed so witnesses are
// reproducible:
//   P4       0-1-2-3
//   C4       0-1-2-3-0
//   CO_C4    {01, 23}
//   C5       0-1-2-3-4-0
//   CHAIR    {01, 12, 23, 24}     (x=0, y=1, z=2, t=3, v=4)
//   CO_CHAIR {02, 03, 04, 13, 14, 34}
enum class PatternKind { kP4, kC4, kCoC4, kC5, kChair, kCoChair };

inline constexpr std::array<PatternKind, 6> kAllPatterns = {
    PatternKind::kP4,  PatternKind::kC4,    PatternKind::kCoC4,
    PatternKind::kC5,  PatternKind::kChair, PatternKind::kCoChair};

// Scan order used by FindAnyForbidden.
inline constexpr std::array<PatternKind, 5> kForbiddenPatterns = {
    PatternKind::kC4, PatternKind::kCoC4, PatternKind::kC5, PatternKind::kChair,
    PatternKind::kCoChair};

inline constexpr std::array<PatternKind, 3> kSplitObstructions = {
    PatternKind::kC4, PatternKind::kCoC4, PatternKind::kC5};

std::string_view PatternName(PatternKind kind);
std::optional<PatternKind> PatternFromName(std::string_view name);

int PatternOrder(PatternKind kind);
std::span<const Edge> PatternEdges(PatternKind kind);
Graph PatternGraph(PatternKind kind);
// Kind whose canonical graph is the complement of this one's.
PatternKind ComplementKind(PatternKind kind);

struct Witness {
  PatternKind kind;
  // vertices[i] is the host vertex playing pattern vertex i.
  std::vector<Vertex> vertices;

  friend bool operator==(const Witness&, const Witness&) = default;
};

// Lexicographically smallest induced occurrence, or nullopt.
std::optional<Witness> FindInduced(const Graph& g, PatternKind kind);

// First witness among kinds in `order`.
std::optional<Witness> FindFirst(const Graph& g, std::span<const PatternKind> order);

// Scans C4, CO_C4, C5, CHAIR, CO_CHAIR in that order.
std::optional<Witness> FindAnyForbidden(const Graph& g);

// Calls visit(tuple) for every induced occurrence in lexicographic order; stops
// when visit returns false.
template <typename Visit>
void ForEachInduced(const Graph& g, PatternKind kind, Visit&& visit);

bool VerifyWitness(const Graph& g, const Witness& w);

namespace internal {
// Depth-first tuple search shared by FindInduced and ForEachInduced.
// Returns false if the callback asked to stop.
bool SearchInduced(const Graph& g, PatternKind kind,
                   bool (*callback)(const std::vector<Vertex>&, void*),
                   void* context);
}  // namespace internal

template <typename Visit>
void ForEachInduced(const Graph& g, PatternKind kind, Visit&& visit) {
  auto trampoline = [](const std::vector<Vertex>& t, void* ctx) -> bool {
    return (*static_cast<std::remove_reference_t<Visit>*>(ctx))(t);
  };
  internal::SearchInduced(g, kind, trampoline, &visit);
}

}  // namespace combrec

#endif  // COMBREC_PATTERNS_H_
