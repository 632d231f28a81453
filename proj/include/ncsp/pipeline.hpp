#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ncsp/embedding.hpp"
#include "ncsp/io.hpp"
#include "ncsp/mssp.hpp"
#include "ncsp/pathunion.hpp"
#include "ncsp/supergraph.hpp"
#include "ncsp/terminals.hpp"

namespace ncsp {

/// Wall-clock seconds per phase.
struct PhaseTimes {
  double normalize = 0;
  double mssp = 0;
  double supergraph = 0;
  double union_ = 0;
  double lengths = 0;
};

struct Solution {
  NormalizedInstance inst;
  GenealogyTree tree;
  SupergraphTimeline timeline;
  UnionResult result;
  /// Materialized directed paths, empty unless requested.
  std::vector<std::vector<DartId>> paths;
  PhaseTimes times;
  std::size_t change_darts = 0;  ///< darts over all MSSP change sets
};

/// normalize -> tree sequence -> supergraphs -> union -> lengths.
/// With `materialize`, paths holds every directed path as well.
Solution solve(const PlanarEmbedding& emb, std::span<const TerminalPair> pairs, MsspMode mode,
               bool materialize = true);

struct BenchRecord {
  std::string kind;
  int n = 0;
  int m = 0;
  int k = 0;
  std::string mode;
  std::uint64_t seed = 0;
  int repetitions = 0;
  PhaseTimes best;  ///< minimum over repetitions, per phase
  std::size_t change_darts = 0;
  std::size_t supergraph_steps = 0;
  std::size_t edges_stamped = 0;
  std::size_t x_darts = 0;
  std::size_t union_walk_steps = 0;
  std::size_t union_skips = 0;
  std::size_t union_darts = 0;
};

/// One row per side length: a side x side grid with k = ceil(sqrt(n)) random
/// pairs. Counters come from the last repetition (they do not vary).
std::vector<BenchRecord> bench_grids(std::span<const int> sides, MsspMode mode, int repetitions, std::uint64_t seed);

/// Versioned CSV: a `# ncsp-bench v1` comment line, a header, then one row per record.
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace ncsp
