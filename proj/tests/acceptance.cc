// One line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "combrec/comb.h"
#include "combrec/corpus.h"
#include "combrec/graph_io.h"
#include "combrec/patterns.h"
#include "combrec/recognizer.h"
#include "combrec/split_threshold.h"
#include "oracle.h"

using namespace combrec;

namespace {

constexpr int kMaxN = 7;
constexpr int kBruteForceMaxN = 6;
constexpr int kGeneratorDraws = 1000;
constexpr int kGeneratorMaxVertices = 200;
constexpr int kFullScanMaxVertices = 60;
constexpr double kCriterion1LimitS = 60.0;
constexpr double kCriterion9LimitS = 300.0;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void Report(int id, const std::string& name, const std::function<Outcome()>& check) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("[%s] %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, name.c_str(),
              o.detail.c_str(), s);
  std::fflush(stdout);
}

// Every class with 1 <= n <= max_n.
std::vector<Graph> Corpus(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    const auto& c = oracle::Classes(n);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

bool IsForbiddenKind(PatternKind k) { return k != PatternKind::kP4; }

std::string Count(const char* what, long long n) { return std::to_string(n) + " " + what; }

std::vector<CensusRow> ReadBaseline(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::string line;
  std::getline(in, line);
  if (line != "n,total,split,threshold,comb") throw std::runtime_error("bad baseline header");
  std::vector<CensusRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    CensusRow r;
    char c;
    std::istringstream s(line);
    s >> r.n >> c >> r.total >> c >> r.split >> c >> r.threshold >> c >> r.comb;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

int main() {
  const auto corpus = Corpus(kMaxN);

  Report(1, "forbidden-pattern equivalence n<=7", [&] {
    static constexpr long long kCounts[] = {1, 2, 4, 11, 34, 156, 1044};
    std::string bad_counts;
    for (int n = 1; n <= kMaxN; ++n) {
      const auto& classes = oracle::Classes(n);
      // Orbit sizes n!/|Aut| must add up to the number of labeled graphs.
      std::uint64_t fact = 1, labeled = 0;
      for (int i = 2; i <= n; ++i) fact *= i;
      for (const Graph& g : classes) labeled += fact / Canonicalize(g).automorphisms;
      if (static_cast<long long>(classes.size()) != kCounts[n - 1] ||
          labeled != (std::uint64_t{1} << (n * (n - 1) / 2))) {
        bad_counts += " n=" + std::to_string(n);
      }
    }
    const auto start = std::chrono::steady_clock::now();
    long long disagree = 0;
    for (const Graph& g : corpus) {
      const bool comb = std::holds_alternative<CombDecomposition>(CombDecompose(g));
      if (comb != !FindAnyForbidden(g).has_value()) ++disagree;
    }
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = bad_counts.empty() && disagree == 0 && s < kCriterion1LimitS;
    return Outcome{ok, Count("classes", static_cast<long long>(corpus.size())) + ", " +
                           Count("disagreements", disagree) +
                           (bad_counts.empty() ? "" : ", class counts wrong at" + bad_counts)};
  });

  Report(2, "certificate soundness n<=7", [&] {
    long long bad = 0, decs = 0, wits = 0;
    for (const Graph& g : corpus) {
      const auto r = CombDecompose(g);
      if (const auto* d = std::get_if<CombDecomposition>(&r)) {
        ++decs;
        if (!ValidateComb(g, *d).empty()) ++bad;
      } else {
        ++wits;
        const auto& w = std::get<Witness>(r);
        if (!IsForbiddenKind(w.kind) || !VerifyWitness(g, w)) ++bad;
      }
    }
    return Outcome{bad == 0, Count("decompositions", decs) + ", " + Count("witnesses", wits) +
                                 ", " + Count("failures", bad)};
  });

  Report(3, "split equivalence n<=7", [&] {
    long long disagree = 0;
    for (const Graph& g : corpus) {
      const SplitResult r = ComputeSplitPartition(g);
      bool ok_branch = true;
      if (const auto* p = std::get_if<SplitPartition>(&r)) {
        ok_branch = IsValidSplitPartition(g, *p);
      } else {
        const auto& w = std::get<Witness>(r);
        ok_branch = VerifyWitness(g, w);
      }
      if (!ok_branch || std::holds_alternative<SplitPartition>(r) != oracle::IsSplit(g)) {
        ++disagree;
      }
    }
    return Outcome{disagree == 0, Count("disagreements", disagree)};
  });

  Report(4, "threshold equivalence n<=7", [&] {
    long long disagree = 0, moved = 0;
    for (const Graph& g : corpus) {
      if (IsThreshold(g) != oracle::IsThreshold(g)) ++disagree;
      const SplitResult r = ComputeSplitPartition(g);
      const auto* p = std::get_if<SplitPartition>(&r);
      if (p == nullptr) continue;
      const ThresholdResult t = DecomposeThreshold(g, *p);
      if (const auto* d = std::get_if<ThresholdDecomposition>(&t)) {
        if (!ValidateThreshold(g, *d).empty() || d->StableSide() != p->stable ||
            d->CliqueSide() != p->clique) {
          ++moved;
        }
      }
    }
    return Outcome{disagree == 0 && moved == 0,
                   Count("disagreements", disagree) + ", " + Count("partition changes", moved)};
  });

  Report(5, "mirror property n<=7", [&] {
    long long failures = 0, paths = 0, breakers = 0;
    for (const Graph& g : corpus) {
      const bool comb = oracle::IsComb(g);
      const bool split = oracle::IsSplit(g);
      bool broken = false;
      ForEachInduced(g, PatternKind::kP4, [&](const std::vector<Vertex>& t) {
        const bool holds = MirrorHolds(g, t[0], t[1], t[2], t[3]);
        if (comb) {
          ++paths;
          if (!holds) ++failures;
        } else if (!holds) {
          broken = true;
        }
        return true;
      });
      if (split && !comb && broken) {
        ++breakers;
        const auto r = CombDecompose(g);
        const auto* w = std::get_if<Witness>(&r);
        if (w == nullptr || !IsForbiddenKind(w->kind) || !VerifyWitness(g, *w)) ++failures;
      }
    }
    return Outcome{failures == 0, Count("comb paths", paths) + ", " +
                                      Count("mirror-breaking non-combs", breakers) + ", " +
                                      Count("failures", failures)};
  });

  Report(6, "complement closure n<=7", [&] {
    long long failures = 0;
    for (const Graph& g : corpus) {
      const Graph c = Complement(g);
      const auto r = CombDecompose(g);
      if (std::holds_alternative<CombDecomposition>(r)) {
        if (!IsComb(c)) ++failures;
        continue;
      }
      const auto& w = std::get<Witness>(r);
      const auto rc = CombDecompose(c);
      const auto* wc = std::get_if<Witness>(&rc);
      // The same vertices carry the complementary pattern in the complement.
      Witness flipped{ComplementKind(w.kind), w.vertices};
      const bool kind_found = wc != nullptr && (wc->kind == ComplementKind(w.kind) ||
                                                FindInduced(c, ComplementKind(w.kind)));
      if (wc == nullptr || !kind_found) ++failures;
      (void)flipped;
    }
    return Outcome{failures == 0, Count("closure failures", failures)};
  });

  Report(7, "heredity n<=7", [&] {
    long long failures = 0, deletions = 0;
    for (const Graph& g : corpus) {
      if (!IsComb(g)) continue;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        VertexSet keep = AllVertices(g);
        keep.erase(v);
        ++deletions;
        if (!IsComb(Induce(g, keep).graph)) ++failures;
      }
    }
    return Outcome{failures == 0, Count("deletions", deletions) + ", " + Count("failures", failures)};
  });

  Report(8, "threshold embedding n<=7", [&] {
    long long failures = 0, graphs = 0;
    for (const Graph& g : corpus) {
      if (!oracle::IsThreshold(g)) continue;
      ++graphs;
      const auto part = std::get<SplitPartition>(ComputeSplitPartition(g));
      const auto t = std::get<ThresholdDecomposition>(DecomposeThreshold(g, part));
      if (!ValidateComb(g, ThresholdToComb(t)).empty()) ++failures;
    }
    return Outcome{failures == 0, Count("threshold graphs", graphs) + ", " + Count("failures", failures)};
  });

  Report(9, "three-way agreement n<=6", [&] {
    const auto start = std::chrono::steady_clock::now();
    long long disagree = 0;
    const auto small = Corpus(kBruteForceMaxN);
    for (const Graph& g : small) {
      const auto label = BruteForceCombLabel(g, kBruteForceMaxN);
      const bool brute = label.has_value() && ValidateComb(g, *label).empty();
      const bool scan = !FindAnyForbidden(g).has_value();
      if (brute != scan || scan != IsComb(g)) ++disagree;
    }
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return Outcome{disagree == 0 && small.size() == 208 && s < kCriterion9LimitS,
                   Count("classes", static_cast<long long>(small.size())) + ", " +
                       Count("disagreements", disagree)};
  });

  Report(10, "generator soundness", [&] {
    std::mt19937_64 rng(20240917);
    long long failures = 0, scanned = 0, largest = 0;
    for (int i = 0; i < kGeneratorDraws; ++i) {
      // Budgets spread over the whole range so that both small, fully scanned
      // graphs and graphs near the size cap are drawn.
      const int budget = 8 + static_cast<int>(rng() % (kGeneratorMaxVertices - 7));
      const CombParams p = RandomCombParams(rng, budget);
      const GeneratedComb gen = GenerateComb(p);
      largest = std::max<long long>(largest, gen.graph.vertex_count());
      if (!ValidateComb(gen.graph, gen.decomposition).empty()) ++failures;
      if (gen.graph.vertex_count() <= kFullScanMaxVertices) {
        ++scanned;
        if (FindAnyForbidden(gen.graph)) ++failures;
      }
    }
    return Outcome{failures == 0, Count("draws", kGeneratorDraws) + ", " +
                                      Count("full scans", scanned) + ", largest " +
                                      std::to_string(largest) + " vertices, " +
                                      Count("failures", failures)};
  });

  Report(11, "census regression", [&] {
    const auto rows = Census(kMaxN);
    const CensusRow n4{4, 11, 9, 8, 9};
    const auto baseline = ReadBaseline(std::string(COMBREC_TEST_DATA_DIR) + "/census_baseline.csv");
    bool ok = rows.size() == 7 && rows[3] == n4 && baseline.size() == rows.size();
    for (std::size_t i = 0; ok && i < rows.size(); ++i) ok = rows[i] == baseline[i];
    return Outcome{ok, ok ? "n=4 row and n=5..7 baseline match" : "census differs:\n" + CensusCsv(rows)};
  });

  Report(12, "graph6 fidelity n<=7", [&] {
    long long failures = 0;
    for (const Graph& g : corpus) {
      if (ParseGraph6(WriteGraph6(g)) != g) ++failures;
    }
    const Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
    const Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    const bool fixed = ParseGraph6("Bw") == k3 && WriteGraph6(p4) == "Ch";
    return Outcome{failures == 0 && fixed, Count("round-trip failures", failures) +
                                               (fixed ? ", Bw and Ch fixed points ok"
                                                      : ", Bw/Ch mismatch")};
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
