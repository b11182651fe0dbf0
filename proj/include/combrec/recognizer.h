#ifndef COMBREC_RECOGNIZER_H_
#define COMBREC_RECOGNIZER_H_

#include <array>
#include <cstdint>
#include <string_view>
#include <variant>

#include "combrec/comb.h"
#include "combrec/graph.h"
#include "combrec/patterns.h"

namespace combrec {

// Decomposition, or a witness of kind C4, CO_C4, C5, CHAIR or CO_CHAIR.
using RecognitionResult = std::variant<CombDecomposition, Witness>;

// Ways a removed path pair (a', b') was put back. The first five follow the
// inductive case analysis; the rest are repairs tried when it falls short.
enum class Surgery {
  kSameSets,        // a' and b' join the sets of a and b
  kThresholdSwap,   // a in X_n, b in A_n: swap and open A_{n+1} = {a'}
  kSingletonSwap,   // n = 0, Y_1 = {a}, M_1 = {b}
  kRotation,        // n = 0, a in Y_2, b in M_1, Y_1 = {c}
  kPlacement,       // any pair of target sets, or a fresh level
  kWindowSplice,    // re-peel the layers spanned by a and b
  kNextP4,          // start over from the second-smallest path
};
inline constexpr int kSurgeryCount = 7;

std::string_view SurgeryName(Surgery s);

struct RecognizerStats {
  std::array<std::uint64_t, kSurgeryCount> used{};
  std::uint64_t threshold_bases = 0;
  std::uint64_t mirror_witnesses = 0;

  std::uint64_t& operator[](Surgery s) { return used[static_cast<int>(s)]; }
  std::uint64_t operator[](Surgery s) const { return used[static_cast<int>(s)]; }
};

// Inductive recognition: split partition, then either the threshold
// construction (no induced P4) or removal of the far end b'a' of the smallest
// induced P4 abb'a', recursion, and reinsertion. Every returned decomposition
// has been validated. Throws InternalError if no reinsertion validates on a
// graph with no forbidden pattern.
RecognitionResult CombDecompose(const Graph& g, RecognizerStats* stats = nullptr);

bool IsComb(const Graph& g);

}  // namespace combrec

#endif  // COMBREC_RECOGNIZER_H_
