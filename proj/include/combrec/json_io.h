#ifndef COMBREC_JSON_IO_H_
#define COMBREC_JSON_IO_H_

#include <vector>

#include "json.hpp"

#include "combrec/comb.h"
#include "combrec/corpus.h"
#include "combrec/patterns.h"

namespace combrec {

using Json = nlohmann::json;

// Decomposition layout: "n", "l", "k0"; "A" (n+1 lists, A_0..A_n), "X" (n+1
// lists, X_1..X_{n+1}), "M" (l lists), "Y" (l+1 lists, Y_2..Y_{l+2}),
// "matchings" (l lists of [y, m]) and "thick" (l booleans).
Json ToJson(const CombDecomposition& d);
// Throws ParseError on a missing field or a wrong type. Array lengths are left
// to ValidateComb, which reports them as CB1.
CombDecomposition CombFromJson(const Json& j);

Json ToJson(const Witness& w);
Json ToJson(const std::vector<CombViolation>& violations);

// Fields "n", "l", "k0", "a", "x", "m", "y", optional "thick" and "seed".
CombParams ParamsFromJson(const Json& j);

}  // namespace combrec

#endif  // COMBREC_JSON_IO_H_
