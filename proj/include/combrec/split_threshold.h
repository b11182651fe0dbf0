#ifndef COMBREC_SPLIT_THRESHOLD_H_
#define COMBREC_SPLIT_THRESHOLD_H_

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "combrec/graph.h"
#include "combrec/patterns.h"

namespace combrec {

// Stable side S and clique side K partitioning V(G).
struct SplitPartition {
  VertexSet stable;
  VertexSet clique;

  friend bool operator==(const SplitPartition&, const SplitPartition&) = default;
};

// Either a partition or a C4 / CO_C4 / C5 witness.
using SplitResult = std::variant<SplitPartition, Witness>;

// Canonical partition: K is the longest clique prefix of the vertices sorted by
// descending degree (ties by index), S the rest.
SplitResult ComputeSplitPartition(const Graph& g);

bool IsValidSplitPartition(const Graph& g, const SplitPartition& part);

// Throws GraphError if S and K overlap.
bool IsCompleteSplit(const Graph& g, const VertexSet& stable,
                     const VertexSet& clique);
bool IsPerfectSplit(const Graph& g, const VertexSet& stable,
                    const VertexSet& clique);

// Layered threshold structure. stable_levels[i] is A_i for i = 0..n and
// clique_levels[j] is X_{j+1} for j = 0..n. A_i is complete to X_j exactly
// when 1 <= j <= i.
struct ThresholdDecomposition {
  int n = 0;
  std::vector<VertexSet> stable_levels;
  std::vector<VertexSet> clique_levels;

  const VertexSet& A(int i) const { return stable_levels.at(i); }
  const VertexSet& X(int j) const { return clique_levels.at(j - 1); }

  VertexSet StableSide() const;
  VertexSet CliqueSide() const;

  friend bool operator==(const ThresholdDecomposition&,
                         const ThresholdDecomposition&) = default;
};

using ThresholdResult = std::variant<ThresholdDecomposition, Witness>;

// Raised when the construction contradicts its own invariants on an input
// that has no induced P4.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Inductive construction by repeated removal of a minimum-degree clique vertex.
// Returns a P4 witness when g has an induced P4. Throws GraphError when `part`
// is not a split partition of g.
ThresholdResult DecomposeThreshold(const Graph& g, const SplitPartition& part);

enum class ThresholdRule { kTH1, kTH2, kTH3, kTH4, kTH5 };

struct ThresholdViolation {
  ThresholdRule rule;
  std::vector<Vertex> vertices;
  std::string detail;
};

std::string_view RuleName(ThresholdRule rule);

// Empty iff `dec` is a valid threshold structure of g:
//   TH1 partition, TH2 clique/stable sides, TH3 nonempty levels,
//   TH4 mandated A_i-X_j edges, TH5 no other edges.
std::vector<ThresholdViolation> ValidateThreshold(
    const Graph& g, const ThresholdDecomposition& dec);

bool IsThreshold(const Graph& g);

}  // namespace combrec

#endif  // COMBREC_SPLIT_THRESHOLD_H_
