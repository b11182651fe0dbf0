#ifndef COMBREC_COMB_H_
#define COMBREC_COMB_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "combrec/graph.h"
#include "combrec/split_threshold.h"

namespace combrec {

// A (y, m) pair with y in Y_i and m in M_i.
using MatchedPair = std::pair<Vertex, Vertex>;

// The layered comb structure.
//
// Stable side S = A ∪ M, clique side K = X ∪ Y, where
//   A_0..A_n, X_1..X_{n+1}  form a threshold core,
//   M_1..M_l, Y_1..Y_{l+2}  are the teeth levels, with Y_1 = X_1 (stored once).
//
// Level i pairs M_i with Y_i through matchings[i-1]. A thin level has exactly
// the matched pairs as M_i-Y_i edges; a thick level has every M_i-Y_i pair
// except the matched ones. A level may also be one-sided (M_i or Y_i empty,
// Y_1 excepted), in which case it has no pairs.
struct CombDecomposition {
  int n = 0;
  int l = 1;
  int k0 = 1;
  std::vector<VertexSet> A;  // A[i] = A_i, i = 0..n
  std::vector<VertexSet> X;  // X[j] = X_{j+1}, j = 0..n
  std::vector<VertexSet> M;  // M[i] = M_{i+1}, i = 0..l-1
  std::vector<VertexSet> Y;  // Y[i] = Y_{i+2}, i = 0..l
  std::vector<std::vector<MatchedPair>> matchings;  // size l
  std::vector<bool> thick;                          // size l

  // 1-based accessors mirroring the set names.
  const VertexSet& A_(int i) const { return A.at(i); }
  const VertexSet& X_(int j) const { return X.at(j - 1); }
  const VertexSet& M_(int i) const { return M.at(i - 1); }
  // Y_(1) is X_1.
  const VertexSet& Y_(int i) const { return i == 1 ? X.at(0) : Y.at(i - 2); }
  VertexSet& MutableY(int i) { return i == 1 ? X.at(0) : Y.at(i - 2); }

  VertexSet StableSide() const;
  VertexSet CliqueSide() const;

  // Empty decomposition with the given shape.
  static CombDecomposition Empty(int n, int l);

  // Sorts matching pairs; keeps every set ascending.
  void Normalize();

  friend bool operator==(const CombDecomposition&,
                         const CombDecomposition&) = default;
};

enum class CombRule { kCB1, kCB2, kCB3, kCB4, kCB5, kCB6, kCB7, kCB8, kCB9, kCB10 };

std::string_view RuleName(CombRule rule);

struct CombViolation {
  CombRule rule;
  std::vector<Vertex> vertices;
  std::string detail;

  friend bool operator==(const CombViolation&, const CombViolation&) = default;
};

// Empty iff every comb axiom CB1..CB10 holds against g. Sorted by rule, then
// by vertices.
//   CB1  sets pairwise disjoint and covering V(G); shape consistent
//   CB2  A ∪ M stable
//   CB3  X ∪ Y clique
//   CB4  A_i complete to X_j for 1 <= j <= i <= n
//   CB5  A_1..A_n complete to Y_2..Y_{l+2}
//   CB6  matched pairs form a bijection Y_i <-> M_i on two-sided levels, with
//        the thin/thick adjacency
//   CB7  Y_j complete to M_i for i < j <= l
//   CB8  Y_{l+1} complete to M_i for i <= k0
//   CB9  A_1..A_n and X_1..X_n nonempty; levels below l nonempty
//   CB10 no other edges (A_0 is isolated)
std::vector<CombViolation> ValidateComb(const Graph& g,
                                        const CombDecomposition& dec);

// Features the decomposition uses beyond the literal layered definition
// (matching-only levels, all of M_1..M_{l-1} and Y_2..Y_l nonempty). Each entry
// is a human-readable description; empty means the decomposition is also a
// literal one.
std::vector<std::string> StrictDefinitionGaps(const CombDecomposition& dec);

// Mirror check for an induced path m-b-b2-m2: outside the path, m and m2 see
// the same vertices, and so do b and b2. Throws GraphError if (m, b, b2, m2) is
// not an induced P4.
bool MirrorHolds(const Graph& g, Vertex m, Vertex b, Vertex b2, Vertex m2);

// First vertex outside the path that separates m from m2 or b from b2, if any.
std::optional<Vertex> MirrorBreaker(const Graph& g, Vertex m, Vertex b,
                                    Vertex b2, Vertex m2);

// l = 1, M_1 = Y_2 = Y_3 = ∅, k0 = 1.
CombDecomposition ThresholdToComb(const ThresholdDecomposition& dec);

}  // namespace combrec

#endif  // COMBREC_COMB_H_
