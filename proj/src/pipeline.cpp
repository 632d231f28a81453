#include "ncsp/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>

#include "ncsp/generate.hpp"

namespace ncsp {

namespace {

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

Solution solve(const PlanarEmbedding& emb, std::span<const TerminalPair> pairs, MsspMode mode, bool materialize) {
  Solution sol;
  Stopwatch clock;
  sol.inst = normalize(emb, pairs);
  sol.tree = genealogy(sol.inst);
  sol.times.normalize = clock.lap();

  {
    SptSequence seq;
    if (sol.inst.size() > 0) {
      seq = spt_sequence(emb, supergraph_roots(sol.inst), mode);
    } else if (mode == MsspMode::Incremental) {
      throw Error(ErrorKind::ModeUnavailable, "the incremental MSSP mode is not built; use reference");
    }
    sol.change_darts = seq.total_added();
    sol.times.mssp = clock.lap();
    sol.timeline = build_supergraphs(emb, sol.inst, seq);
    sol.times.supergraph = clock.lap();
  }
  clock.lap();  // freeing the tree sequence belongs to no phase

  sol.result = extract_union(emb, sol.timeline, sol.inst, sol.tree);
  sol.times.union_ = clock.lap();

  if (materialize) {
    sol.paths = materialize_all(emb, sol.result, sol.tree, sol.inst);
    sol.result.lengths.clear();
    for (const auto& p : sol.paths) sol.result.lengths.push_back(static_cast<int>(p.size()));
  } else {
    path_lengths(emb, sol.result, sol.tree, sol.inst);
  }
  sol.times.lengths = clock.lap();
  return sol;
}

std::vector<BenchRecord> bench_grids(std::span<const int> sides, MsspMode mode, int repetitions, std::uint64_t seed) {
  std::vector<BenchRecord> records;
  for (int side : sides) {
    const auto data = generate_grid(side, side);
    const auto emb = embedding_from(data);
    const int n = emb.num_vertices();
    const int k = std::min(static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)))), emb.outer_length() / 2);
    const std::uint64_t instance_seed = seed + static_cast<std::uint64_t>(side);
    Rng rng(instance_seed);
    const auto pairs = random_pairs(emb, k, rng);

    BenchRecord rec;
    rec.kind = "grid";
    rec.n = n;
    rec.m = emb.num_edges();
    rec.k = k;
    rec.mode = mode == MsspMode::Reference ? "reference" : "incremental";
    rec.seed = instance_seed;
    rec.repetitions = repetitions;
    for (int rep = 0; rep < std::max(1, repetitions); ++rep) {
      const auto sol = solve(emb, pairs, mode, /*materialize=*/false);
      const auto keep_min = [rep](double& best, double t) { best = rep == 0 ? t : std::min(best, t); };
      keep_min(rec.best.normalize, sol.times.normalize);
      keep_min(rec.best.mssp, sol.times.mssp);
      keep_min(rec.best.supergraph, sol.times.supergraph);
      keep_min(rec.best.union_, sol.times.union_);
      keep_min(rec.best.lengths, sol.times.lengths);
      rec.change_darts = sol.change_darts;
      rec.supergraph_steps = sol.timeline.walk_steps;
      rec.edges_stamped = sol.timeline.edges_stamped;
      rec.x_darts = sol.result.x_darts;
      rec.union_walk_steps = sol.result.walk_steps;
      rec.union_skips = sol.result.skip_steps;
      rec.union_darts = sol.result.num_union_darts();
    }
    records.push_back(rec);
  }
  return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "# ncsp-bench v1\n";
  out << "kind,n,m,k,mode,seed,repetitions,t_normalize,t_mssp,t_supergraph,t_union,t_lengths,"
         "change_darts,supergraph_steps,edges_stamped,x_darts,union_walk_steps,union_skips,union_darts\n";
  for (const auto& r : records) {
    out << r.kind << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.mode << ',' << r.seed << ',' << r.repetitions
        << ',' << r.best.normalize << ',' << r.best.mssp << ',' << r.best.supergraph << ',' << r.best.union_ << ','
        << r.best.lengths << ',' << r.change_darts << ',' << r.supergraph_steps << ',' << r.edges_stamped << ','
        << r.x_darts << ',' << r.union_walk_steps << ',' << r.union_skips << ',' << r.union_darts << '\n';
  }
}

}  // namespace ncsp
