#ifndef COMBREC_GRAPH_IO_H_
#define COMBREC_GRAPH_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "combrec/graph.h"

namespace combrec {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// graph6: size prefix, then the upper triangle in column order (0-1, 0-2,
// 1-2, 0-3, ...), six bits per byte offset by 63. Surrounding whitespace is
// ignored.
Graph ParseGraph6(std::string_view text);
std::string WriteGraph6(const Graph& g);

// "n m" on the first content line, then m lines "u v". Blank lines and
// everything after '#' are ignored.
Graph ParseEdgeList(std::string_view text);
std::string WriteEdgeList(const Graph& g);

}  // namespace combrec

#endif  // COMBREC_GRAPH_IO_H_
