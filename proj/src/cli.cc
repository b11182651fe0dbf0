#include "combrec/cli.h"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "combrec/comb.h"
#include "combrec/corpus.h"
#include "combrec/graph_io.h"
#include "combrec/json_io.h"
#include "combrec/recognizer.h"

namespace combrec {
namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kGraph6, kEdgeList };

std::string ReadSource(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot read '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

Format DetectFormat(const std::string& text, const std::string& flag) {
  if (flag == "graph6") return Format::kGraph6;
  if (flag == "edgelist") return Format::kEdgeList;
  if (!flag.empty()) throw InputError("unknown format '" + flag + "'");
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto hash = line.find('#');
    const std::string content = line.substr(0, hash);
    const auto first = content.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      if (hash != std::string::npos) return Format::kEdgeList;
      continue;
    }
    const auto last = content.find_last_not_of(" \t\r");
    const std::string core = content.substr(first, last - first + 1);
    return core.find_first_of(" \t") == std::string::npos ? Format::kGraph6 : Format::kEdgeList;
  }
  return Format::kGraph6;
}

struct InputGraph {
  int line = 0;
  std::optional<Graph> graph;
  std::string error;
};

std::vector<InputGraph> ParseGraphs(const std::string& text, Format format) {
  std::vector<InputGraph> out;
  if (format == Format::kEdgeList) {
    InputGraph item;
    item.line = 1;
    try {
      item.graph = ParseEdgeList(text);
    } catch (const ParseError& e) {
      item.error = e.what();
    }
    out.push_back(std::move(item));
    return out;
  }
  std::istringstream lines(text);
  std::string line;
  int no = 0;
  while (std::getline(lines, line)) {
    ++no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    InputGraph item;
    item.line = no;
    try {
      item.graph = ParseGraph6(line);
    } catch (const ParseError& e) {
      item.error = e.what();
    }
    out.push_back(std::move(item));
  }
  if (out.empty()) throw InputError("no graph in input");
  return out;
}

std::string Hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Json Report(const std::string& command, const Graph& g, Json result, double ms) {
  return Json{{"command", command},
              {"input_digest", Hex64(Fnv1a64(WriteGraph6(g)))},
              {"result", std::move(result)},
              {"timing_ms", ms}};
}

double ElapsedMs(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

// Runs `body` on every graph of the input; returns the combined exit code.
template <typename Body>
int ForEachGraph(const std::string& text, Format format, std::ostream& err, Body&& body) {
  const auto graphs = ParseGraphs(text, format);
  bool malformed = false;
  bool negative = false;
  for (const auto& item : graphs) {
    if (!item.graph) {
      err << "error: " << (graphs.size() > 1 ? "line " + std::to_string(item.line) + ": " : "")
          << item.error << '\n';
      malformed = true;
      continue;
    }
    if (body(*item.graph) != kExitOk) negative = true;
  }
  if (malformed) return kExitInput;
  return negative ? kExitNegative : kExitOk;
}

int Recognize(const std::string& command, bool full, const std::string& path,
              const std::string& format, std::istream& in, std::ostream& out,
              std::ostream& err) {
  const std::string text = ReadSource(path, in);
  return ForEachGraph(text, DetectFormat(text, format), err, [&](const Graph& g) {
    const auto start = std::chrono::steady_clock::now();
    const RecognitionResult r = CombDecompose(g);
    const double ms = ElapsedMs(start);
    Json result;
    int code = kExitOk;
    if (const auto* d = std::get_if<CombDecomposition>(&r)) {
      if (full) {
        result["comb"] = ToJson(*d);
      } else {
        result["comb"] = Json{{"vertices", g.vertex_count()}, {"n", d->n}, {"l", d->l}};
      }
    } else {
      result["not_comb"] = ToJson(std::get<Witness>(r));
      code = kExitNegative;
    }
    out << Report(command, g, std::move(result), ms).dump() << '\n';
    return code;
  });
}

Graph ReadSingleGraph(const std::string& path, const std::string& format, std::istream& in) {
  const std::string text = ReadSource(path, in);
  auto graphs = ParseGraphs(text, DetectFormat(text, format));
  if (graphs.size() != 1) throw InputError("expected exactly one graph in '" + path + "'");
  if (!graphs.front().graph) throw InputError(graphs.front().error);
  return *graphs.front().graph;
}

Json ParseJson(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(what + ": invalid JSON (" + e.what() + ")");
  }
}

int Validate(const std::string& graph_path, const std::string& dec_path,
             const std::string& format, std::istream& in, std::ostream& out) {
  if (graph_path == "-" && dec_path == "-") {
    throw InputError("graph and decomposition cannot both come from standard input");
  }
  const Graph g = ReadSingleGraph(graph_path, format, in);
  Json j = ParseJson(ReadSource(dec_path, in), dec_path);
  // A decompose report carries the decomposition under result.comb.
  if (j.is_object() && j.contains("result")) {
    const Json& result = j["result"];
    if (!result.is_object() || !result.contains("comb") || !result["comb"].is_object()) {
      throw InputError(dec_path + ": report holds no decomposition");
    }
    j = result["comb"];
  }
  CombDecomposition d;
  try {
    d = CombFromJson(j);
  } catch (const ParseError& e) {
    throw InputError(dec_path + ": " + e.what());
  }
  const auto start = std::chrono::steady_clock::now();
  const auto violations = ValidateComb(g, d);
  Json result;
  if (violations.empty()) {
    Json gaps = Json::array();
    for (const auto& s : StrictDefinitionGaps(d)) gaps.push_back(s);
    result["valid"] = Json{{"strict_gaps", std::move(gaps)}};
  } else {
    result["invalid"] = ToJson(violations);
  }
  out << Report("validate", g, std::move(result), ElapsedMs(start)).dump() << '\n';
  return violations.empty() ? kExitOk : kExitNegative;
}

int Generate(const std::string& params_path, std::optional<std::uint64_t> seed,
             const std::string& emit, std::istream& in, std::ostream& out) {
  CombParams params;
  try {
    params = ParamsFromJson(ParseJson(ReadSource(params_path, in), params_path));
  } catch (const ParseError& e) {
    throw InputError(params_path + ": " + e.what());
  }
  if (seed) params.seed = *seed;
  const auto start = std::chrono::steady_clock::now();
  GeneratedComb gen;
  try {
    gen = GenerateComb(params);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("invalid parameters: ") + e.what());
  }
  const Json dec = ToJson(gen.decomposition);
  if (emit == "graph6") {
    out << WriteGraph6(gen.graph) << '\n' << dec.dump() << '\n';
  } else if (emit == "edgelist") {
    out << WriteEdgeList(gen.graph) << "# decomposition: " << dec.dump() << '\n';
  } else {
    Json result{{"generated", Json{{"graph6", WriteGraph6(gen.graph)}, {"decomposition", dec}}}};
    out << Report("generate", gen.graph, std::move(result), ElapsedMs(start)).dump() << '\n';
  }
  return kExitOk;
}

int ComplementCommand(const std::string& path, const std::string& format, std::istream& in,
                      std::ostream& out, std::ostream& err) {
  const std::string text = ReadSource(path, in);
  const Format f = DetectFormat(text, format);
  return ForEachGraph(text, f, err, [&](const Graph& g) {
    const Graph c = Complement(g);
    out << (f == Format::kGraph6 ? WriteGraph6(c) + "\n" : WriteEdgeList(c));
    return kExitOk;
  });
}

}  // namespace

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Recognize, decompose and validate comb graphs", "combrec"};
  app.require_subcommand(1);

  std::string input, format, graph_path, dec_path, params_path, emit = "json";
  std::optional<std::uint64_t> seed;
  int max_n = 0;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "graph file, or - for standard input")->required();
    sub->add_option("--format", format, "graph6 or edgelist (detected when omitted)")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
  };
  CLI::App* recognize = app.add_subcommand("recognize", "report whether the graph is a comb");
  add_input(recognize);
  CLI::App* decompose = app.add_subcommand("decompose", "print a decomposition or a witness");
  add_input(decompose);
  CLI::App* validate = app.add_subcommand("validate", "check a decomposition against a graph");
  validate->add_option("--graph", graph_path, "graph file")->required();
  validate->add_option("--decomposition", dec_path, "decomposition or decompose report")
      ->required();
  validate->add_option("--format", format, "graph6 or edgelist")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  CLI::App* generate = app.add_subcommand("generate", "build a comb from set sizes");
  generate->add_option("--params", params_path, "JSON parameter file")->required();
  generate->add_option("--seed", seed, "relabeling seed (overrides the file)");
  generate->add_option("--emit", emit, "graph6, edgelist or json")
      ->check(CLI::IsMember({"graph6", "edgelist", "json"}));
  CLI::App* census = app.add_subcommand("census", "class counts up to isomorphism");
  census->add_option("--max-n", max_n, "largest order, at most 7")
      ->required()
      ->check(CLI::Range(0, 7));
  CLI::App* complement = app.add_subcommand("complement", "print the complement graph");
  add_input(complement);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (const auto nl = msg.find('\n'); nl != std::string::npos) msg.resize(nl);
    err << "error: " << msg << '\n';
    return kExitInput;
  }

  try {
    if (recognize->parsed()) return Recognize("recognize", false, input, format, in, out, err);
    if (decompose->parsed()) return Recognize("decompose", true, input, format, in, out, err);
    if (validate->parsed()) return Validate(graph_path, dec_path, format, in, out);
    if (generate->parsed()) return Generate(params_path, seed, emit, in, out);
    if (census->parsed()) {
      out << CensusCsv(Census(max_n));
      return kExitOk;
    }
    if (complement->parsed()) return ComplementCommand(input, format, in, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  err << "error: no command\n";
  return kExitInput;
}

}  // namespace combrec
