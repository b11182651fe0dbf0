#include "combrec/graph_io.h"

#include <charconv>
#include <sstream>
#include <vector>

namespace combrec {
namespace {

constexpr int kOffset = 63;

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int Sextet(char c, std::size_t pos) {
  const int v = static_cast<unsigned char>(c);
  if (v < kOffset || v > 126) {
    throw ParseError("graph6: invalid character at offset " + std::to_string(pos));
  }
  return v - kOffset;
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long ToInt(std::string_view tok, int line_no) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("edge list line " + std::to_string(line_no) + ": '" +
                     std::string(tok) + "' is not an integer");
  }
  return v;
}

}  // namespace

Graph ParseGraph6(std::string_view text) {
  text = Trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  auto next = [&]() {
    if (pos >= text.size()) throw ParseError("graph6: truncated size prefix");
    const int v = Sextet(text[pos], pos);
    ++pos;
    return v;
  };
  long long n = next();
  if (n == 63) {
    const int width = (pos < text.size() && text[pos] == '~') ? 6 : 3;
    if (width == 6) ++pos;
    n = 0;
    for (int i = 0; i < width; ++i) n = (n << 6) | next();
  }
  if (n > kMaxVertices) {
    throw ParseError("graph6: " + std::to_string(n) + " vertices exceeds the limit of " +
                     std::to_string(kMaxVertices));
  }

  const auto nv = static_cast<std::size_t>(n);
  const std::size_t bits = nv * (nv == 0 ? 0 : nv - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  const std::size_t have = text.size() - pos;
  if (have < need) {
    throw ParseError("graph6: truncated payload (" + std::to_string(have) + " of " +
                     std::to_string(need) + " bytes)");
  }
  if (have > need) throw ParseError("graph6: trailing characters after payload");

  std::vector<Bits> rows(nv, Bits(nv));
  std::size_t k = 0;
  int current = 0;
  for (std::size_t j = 1; j < nv; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      if (k % 6 == 0) current = Sextet(text[pos + k / 6], pos + k / 6);
      if ((current >> (5 - k % 6)) & 1) {
        rows[i].set(j);
        rows[j].set(i);
      }
    }
  }
  for (std::size_t q = 0; q < need; ++q) Sextet(text[pos + q], pos + q);
  return GraphRows::Adopt(std::move(rows));
}

std::string WriteGraph6(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kOffset));
    }
  }
  int current = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      current = (current << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(current + kOffset));
        current = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((current << (6 - filled)) + kOffset));
  return out;
}

Graph ParseEdgeList(std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string_view>>> lines;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto toks = Tokens(Trim(line));
    if (!toks.empty()) lines.emplace_back(line_no, std::move(toks));
  }
  if (lines.empty()) throw ParseError("edge list: missing 'n m' header");
  const auto& [header_line, header] = lines.front();
  if (header.size() != 2) {
    throw ParseError("edge list line " + std::to_string(header_line) +
                     ": header must be 'n m'");
  }
  const long long n = ToInt(header[0], header_line);
  const long long m = ToInt(header[1], header_line);
  if (n < 0 || n > kMaxVertices) {
    throw ParseError("edge list: vertex count " + std::to_string(n) + " out of range");
  }
  if (m < 0) throw ParseError("edge list: negative edge count");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError("edge list: header announces " + std::to_string(m) + " edges but " +
                     std::to_string(lines.size() - 1) + " follow");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [no, toks] = lines[i];
    if (toks.size() != 2) {
      throw ParseError("edge list line " + std::to_string(no) + ": expected 'u v'");
    }
    const long long u = ToInt(toks[0], no);
    const long long v = ToInt(toks[1], no);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge list line " + std::to_string(no) + ": vertex out of range");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  try {
    return BuildGraph(static_cast<int>(n), edges);
  } catch (const GraphError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

std::string WriteEdgeList(const Graph& g) {
  const auto edges = g.edges();
  std::ostringstream out;
  out << g.vertex_count() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace combrec
