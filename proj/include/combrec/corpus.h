#ifndef COMBREC_CORPUS_H_
#define COMBREC_CORPUS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "combrec/comb.h"
#include "combrec/graph.h"

namespace combrec {

// Set sizes of a comb to build. Sizes are listed in the same order as the
// decomposition arrays: A_0..A_n, X_1..X_{n+1}, M_1..M_l, Y_2..Y_{l+2}. An
// empty `thick` means every level is thin.
struct CombParams {
  int n = 0;
  int l = 1;
  int k0 = 1;
  std::vector<int> a;
  std::vector<int> x;
  std::vector<int> m;
  std::vector<int> y;
  std::vector<bool> thick;
  std::uint64_t seed = 0;
};

struct GeneratedComb {
  Graph graph;
  CombDecomposition decomposition;
};

// Violated constraints, one line each; empty when the parameters are usable.
std::vector<std::string> CheckParams(const CombParams& params);

// Builds exactly the mandated edges. Vertices are laid out set by set, matched
// pairs ascending to ascending, and then relabeled by a permutation drawn
// from `seed`. Throws std::invalid_argument listing the violated constraints.
GeneratedComb GenerateComb(const CombParams& params);

// Random valid parameters with at most max_vertices vertices in total.
CombParams RandomCombParams(std::mt19937_64& rng, int max_vertices);

// G(n, p). Throws std::invalid_argument unless 0 <= p <= 1.
Graph RandomGraph(int n, double p, std::uint64_t seed);

inline constexpr int kMaxCanonicalOrder = 10;
inline constexpr int kMaxEnumerationOrder = 8;

struct CanonicalForm {
  // First byte n, then the upper triangle in graph6 column order packed
  // eight bits per byte, most significant bit first.
  std::string code;
  // Number of vertex permutations reaching the code, i.e. |Aut(g)|.
  std::uint64_t automorphisms = 0;
};

// Minimum over all vertex permutations of the upper-triangle bit string.
// Throws std::invalid_argument above kMaxCanonicalOrder vertices.
CanonicalForm Canonicalize(const Graph& g);
std::string CanonicalCode(const Graph& g);

// Calls visit for every labeled graph on n vertices (graph6 bit order read as
// a counter), or for one representative per isomorphism class ordered by
// canonical code. Throws std::invalid_argument above kMaxEnumerationOrder.
void EnumerateGraphs(int n, bool up_to_iso, const std::function<void(const Graph&)>& visit);

// Class representatives on n vertices, in canonical-code order.
std::vector<Graph> GraphsUpToIso(int n);

struct CensusRow {
  int n = 0;
  std::uint64_t total = 0;
  std::uint64_t split = 0;
  std::uint64_t threshold = 0;
  std::uint64_t comb = 0;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

// Isomorphism-class counts for 1 <= n <= max_n (max_n <= 7), decided by
// induced-pattern scans only.
std::vector<CensusRow> Census(int max_n);
std::string CensusCsv(const std::vector<CensusRow>& rows);

// Exhaustive search over role assignments. With allow_extensions = false only
// decompositions without StrictDefinitionGaps are accepted. Throws
// std::invalid_argument when g has more than limit_n vertices.
std::optional<CombDecomposition> BruteForceCombLabel(const Graph& g, int limit_n = 6,
                                                     bool allow_extensions = true);

}  // namespace combrec

#endif  // COMBREC_CORPUS_H_
