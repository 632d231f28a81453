// Acceptance run: one PASS/FAIL/SKIP line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "ncsp/generate.hpp"
#include "ncsp/mssp.hpp"
#include "ncsp/pathunion.hpp"
#include "ncsp/pipeline.hpp"
#include "ncsp/subdivide.hpp"
#include "ncsp/supergraph.hpp"
#include "ncsp/terminals.hpp"
#include "ncsp/verify.hpp"

using namespace ncsp;

namespace {

// Tolerances and sizes.
constexpr int kCorpusSize = 500;
constexpr double kCorpusSeconds = 120.0;
constexpr int kMaxK = 64;
constexpr int kExhaustiveIspMaxN = 200;
constexpr int kIspSamples = 1000;
constexpr double kMaxSlope = 1.15;
// Phases run in well under a second, so the minimum over many runs is cheap and damps noise.
constexpr int kScalingReps = 15;
constexpr int kWeightedInstances = 100;
constexpr int kMaxWeight = 5;
const std::vector<int> kScalingSides{100, 200, 400, 800, 1000};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int criterion, const char* status, const std::string& detail) {
  std::printf("criterion %d: %s  %s\n", criterion, status, detail.c_str());
  std::fflush(stdout);
  if (std::string(status) == "FAIL") ++failures;
}

void report(int criterion, bool pass, const std::string& detail) { report(criterion, pass ? "PASS" : "FAIL", detail); }

struct CorpusInstance {
  std::string label;
  PlanarEmbedding emb;
  std::vector<TerminalPair> pairs;
};

// Sizes are spread over three tiers; instance 0 and 1 are the largest allowed.
CorpusInstance corpus_instance(int j) {
  const std::uint64_t seed = 1000 + static_cast<std::uint64_t>(j);
  Rng rng(seed);
  const int tier = j % 10 < 2 ? 0 : (j % 10 < 8 ? 1 : 2);
  CorpusInstance c;
  std::ostringstream label;
  if (j % 2 == 0) {
    static constexpr int lo[] = {3, 15, 61}, hi[] = {14, 60, 100};
    int w = static_cast<int>(rng.between(lo[tier], hi[tier]));
    int h = static_cast<int>(rng.between(lo[tier], hi[tier]));
    if (j == 0) w = h = 100;
    c.emb = embedding_from(generate_grid(w, h));
    label << "grid " << w << "x" << h;
  } else {
    static constexpr int lo[] = {10, 201, 2001}, hi[] = {200, 2000, 5000};
    int n = static_cast<int>(rng.between(lo[tier], hi[tier]));
    if (j == 1) n = 5000;
    c.emb = embedding_from(generate_disk(n, seed));
    label << "disk " << n;
  }
  const int k_max = std::min(kMaxK, c.emb.outer_length() / 2);
  const int k = j % 5 == 0 ? k_max : static_cast<int>(rng.between(1, k_max));
  c.pairs = random_pairs(c.emb, k, rng, j % 4 == 3 ? 0.3 : 0.0);
  label << " k=" << c.pairs.size() << " seed=" << seed;
  c.label = label.str();
  return c;
}

// A BFS path from a to b that avoids the vertices in `banned`; empty if none.
std::vector<VertexId> bfs_path_avoiding(const PlanarEmbedding& emb, VertexId a, VertexId b,
                                        const std::vector<VertexId>& banned) {
  std::vector<int> prev(emb.num_vertices(), -2);
  for (VertexId v : banned) prev[v] = -3;
  prev[a] = -1;
  std::vector<VertexId> queue{a};
  for (std::size_t h = 0; h < queue.size() && prev[b] == -2; ++h) {
    for (DartId d : emb.rotation(queue[h])) {
      const VertexId w = emb.head(d);
      if (prev[w] != -2) continue;
      prev[w] = queue[h];
      queue.push_back(w);
    }
  }
  if (prev[b] < -1) return {};
  std::vector<VertexId> path;
  for (VertexId v = b; v != -1; v = prev[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// Crossed hand instances, plus random interleaved boundary pairs joined by
// terminal-avoiding BFS paths, which cross by the Jordan curve theorem.
std::pair<int, int> crossing_controls() {
  int detected = 0, total = 0;
  const auto g9 = fixtures::g9();
  const auto g16 = embedding_from(generate_grid(4, 4));
  const std::vector<std::tuple<const PlanarEmbedding*, std::vector<VertexId>, std::vector<VertexId>>> hand{
      {&g9, {3, 4, 5}, {1, 4, 7}},
      {&g9, {3, 4, 1, 2}, {5, 4, 1, 0}},
      {&g16, {4, 5, 6, 10}, {9, 5, 6, 7}},
      {&g16, {0, 4, 5, 6, 7, 11}, {8, 4, 5, 6, 7, 3}},
  };
  for (const auto& [emb, p, q] : hand) {
    ++total;
    detected += check_noncrossing(*emb, p, q).crossing ? 1 : 0;
  }
  for (std::uint64_t seed = 1; total < 104; ++seed) {
    const auto emb = seed % 2 ? embedding_from(generate_disk(60 + static_cast<int>(seed % 40) * 10, seed))
                              : embedding_from(generate_grid(5 + static_cast<int>(seed % 20), 5 + static_cast<int>(seed % 13)));
    Rng rng(seed);
    const int r = emb.outer_length();
    std::vector<int> pos;
    while (pos.size() < 4) {
      const int x = static_cast<int>(rng.below(r));
      if (std::find(pos.begin(), pos.end(), x) == pos.end()) pos.push_back(x);
    }
    std::sort(pos.begin(), pos.end());
    const auto at = [&](int x) { return emb.outer_vertices()[pos[x]]; };
    const auto p = bfs_path_avoiding(emb, at(0), at(2), {at(1), at(3)});
    const auto q = bfs_path_avoiding(emb, at(1), at(3), {at(0), at(2)});
    if (p.empty() || q.empty()) continue;
    ++total;
    detected += check_noncrossing(emb, p, q).crossing ? 1 : 0;
  }
  return {detected, total};
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const double lx = std::log(x[j]), ly = std::log(y[j]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void run_corpus() {
  std::size_t pairs = 0, length_mismatch = 0, crossings = 0, crossing_checks = 0, union_bad = 0;
  std::size_t sibling_bad = 0, ancestor_bad = 0, structure_checks = 0;
  std::size_t isp_exhaustive_instances = 0, isp_sampled_instances = 0, isp_comparisons = 0, isp_violations = 0;
  std::size_t max_n = 0;
  std::string first_failure;
  double solve_seconds = 0;

  const auto note = [&](const std::string& what, const CorpusInstance& c) {
    if (first_failure.empty()) first_failure = what + " on " + c.label;
  };

  for (int j = 0; j < kCorpusSize; ++j) {
    const auto c = corpus_instance(j);
    const int n = c.emb.num_vertices();
    max_n = std::max<std::size_t>(max_n, n);

    const auto t0 = Clock::now();
    Solution sol;
    try {
      sol = solve(c.emb, c.pairs, MsspMode::Reference);
    } catch (const Error& e) {
      ++length_mismatch;
      note(std::string("solve threw ") + e.what(), c);
      continue;
    }
    for (int i = 0; i < sol.inst.size(); ++i) {
      ++pairs;
      const auto& p = sol.inst.pairs[i];
      if (sol.result.lengths[i] != bfs_distance(c.emb, p.s, p.t)) {
        ++length_mismatch;
        note("length mismatch at pair " + std::to_string(i + 1), c);
      }
    }
    solve_seconds += seconds_since(t0);

    const auto audit_report = audit(c.emb, sol.inst, sol.tree, sol.result, sol.paths);
    for (const auto& chk : audit_report.checks) {
      if (chk.name == "noncrossing") {
        crossing_checks += chk.checked;
        if (!chk.pass) ++crossings, note("crossing: " + chk.witness, c);
      } else if (chk.name == "union-consistency") {
        if (!chk.pass) ++union_bad, note("union: " + chk.witness, c);
      } else if (chk.name == "sibling-disjoint") {
        structure_checks += chk.checked;
        if (!chk.pass) ++sibling_bad, note("sibling: " + chk.witness, c);
      } else if (chk.name == "ancestor-containment") {
        structure_checks += chk.checked;
        if (!chk.pass) ++ancestor_bad, note("ancestor: " + chk.witness, c);
      }
    }

    const int k = sol.inst.size();
    if (n <= kExhaustiveIspMaxN) {
      ++isp_exhaustive_instances;
      for (int i = 1; i <= k; ++i) {
        // X_i equal to X_{i-1} repeats the previous report
        bool grew = i == 1;
        for (EdgeId e = 0; e < c.emb.num_edges() && !grew; ++e) grew = sol.timeline.edge_stamp[e] == i;
        if (!grew) continue;
        const auto r = check_isp_preservation(c.emb, sol.timeline, i, 0, 0);
        isp_comparisons += r.comparisons;
        isp_violations += r.violations.size();
        if (!r.ok()) note("ISP violation in X_" + std::to_string(i), c);
      }
    } else if (k > 0) {
      ++isp_sampled_instances;
      Rng rng(77 + static_cast<std::uint64_t>(j));
      for (int left = kIspSamples; left > 0; left -= 100) {
        const int i = 1 + static_cast<int>(rng.below(k));
        const auto r = check_isp_preservation(c.emb, sol.timeline, i, std::min(100, left), rng.next());
        isp_comparisons += r.comparisons;
        isp_violations += r.violations.size();
        if (!r.ok()) note("ISP violation in X_" + std::to_string(i), c);
      }
    }
  }

  std::ostringstream d1;
  d1 << kCorpusSize << " instances (largest n=" << max_n << "), " << pairs << " pairs, " << length_mismatch
     << " length mismatches vs BFS; solve+oracle " << solve_seconds << " s (limit " << kCorpusSeconds << " s)";
  if (!first_failure.empty()) d1 << "; first failure: " << first_failure;
  report(1, length_mismatch == 0 && solve_seconds < kCorpusSeconds, d1.str());

  const auto [detected, controls] = crossing_controls();
  std::ostringstream d2;
  d2 << crossing_checks << " pair checks, " << crossings << " instances with a crossing; negative controls detected "
     << detected << "/" << controls;
  report(2, crossings == 0 && detected == controls, d2.str());

  std::ostringstream d3;
  d3 << union_bad << " of " << kCorpusSize << " instances with Y_k different from the union of the paths";
  report(3, union_bad == 0, d3.str());

  std::ostringstream d4;
  d4 << structure_checks << " shared-dart checks; sibling violations in " << sibling_bad
     << " instances, ancestor-containment violations in " << ancestor_bad;
  report(4, sibling_bad == 0 && ancestor_bad == 0, d4.str());

  std::ostringstream d5;
  d5 << isp_exhaustive_instances << " instances exhaustive (n <= " << kExhaustiveIspMaxN << "), "
     << isp_sampled_instances << " sampled (" << kIspSamples << " triples each); " << isp_comparisons
     << " comparisons, " << isp_violations << " violations";
  report(5, isp_violations == 0, d5.str());
}

void run_genealogy_golden() {
  const auto f = fixtures::seven_pairs();
  const std::map<int, int> expect{{2, 1}, {6, 1}, {3, 2}, {4, 2}, {5, 4}, {7, 6}};
  bool ok = true;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = normalize(f.emb, fixtures::scrambled(f.labelled, seed));
    const auto tree = genealogy(inst);
    for (int j = 1; j <= 7; ++j) ok = ok && inst.pairs[j - 1].s == f.s[j] && inst.pairs[j - 1].t == f.t[j];
    ok = ok && tree.parent[0] == -1;
    for (const auto& [child, parent] : expect) ok = ok && tree.parent[child - 1] == parent - 1;
  }
  report(6, ok, "seven nested pairs, 10 scrambled inputs: parents {2:1, 6:1, 3:2, 4:2, 5:4, 7:6}");
}

void run_scaling() {
  std::vector<double> ns, times;
  std::ostringstream rows;
  double worst_sg = 0, worst_union = 0, worst_change = 0;
  for (int side : kScalingSides) {
    const auto emb = embedding_from(generate_grid(side, side));
    const int n = emb.num_vertices();
    const int k = std::min(static_cast<int>(std::ceil(std::sqrt(n))), emb.outer_length() / 2);
    Rng rng(static_cast<std::uint64_t>(side));
    const auto pairs = random_pairs(emb, k, rng);
    const auto inst = normalize(emb, pairs);
    const auto tree = genealogy(inst);
    const auto t_mssp = Clock::now();
    const auto seq = spt_sequence(emb, supergraph_roots(inst), MsspMode::Reference);
    const double mssp_seconds = seconds_since(t_mssp);

    double best = 1e100;
    SupergraphTimeline tl;
    UnionResult result;
    for (int rep = 0; rep < kScalingReps; ++rep) {
      const auto t0 = Clock::now();
      tl = build_supergraphs(emb, inst, seq);
      result = extract_union(emb, tl, inst, tree);
      path_lengths(emb, result, tree, inst);
      best = std::min(best, seconds_since(t0));
    }
    ns.push_back(n);
    times.push_back(best);
    const double sg = static_cast<double>(tl.walk_steps) / n;
    const double un = static_cast<double>(result.walk_steps + result.skip_steps) / n;
    const double ch = static_cast<double>(seq.total_added()) / (2.0 * emb.num_edges());
    worst_sg = std::max(worst_sg, sg);
    worst_union = std::max(worst_union, un);
    worst_change = std::max(worst_change, ch);
    rows << "\n    n=" << n << " k=" << k << " phases=" << best << " s (mssp reference " << mssp_seconds
         << " s, not fitted) supergraph_steps/n=" << sg << " union_steps+skips/n=" << un
         << " change_darts/2m=" << ch;
  }
  const double slope = loglog_slope(ns, times);
  std::ostringstream d;
  d << "supergraph+union+lengths log-log slope " << slope << " (limit " << kMaxSlope << "); c = max steps/n: supergraph "
    << worst_sg << ", union " << worst_union << "; max reference change darts / 2m " << worst_change
    << "; incremental end-to-end part skipped, mode not built" << rows.str();
  report(7, slope <= kMaxSlope, d.str());
}

void run_weighted() {
  int mismatches = 0, compared = 0;
  for (int j = 0; j < kWeightedInstances; ++j) {
    const std::uint64_t seed = 5000 + static_cast<std::uint64_t>(j);
    Rng rng(seed);
    const int w = static_cast<int>(rng.between(3, 20));
    const int h = static_cast<int>(rng.between(3, 20));
    const auto data = generate_grid(w, h, kMaxWeight, seed);
    const auto emb = embedding_from(data);
    const int k = static_cast<int>(rng.between(1, std::min(16, emb.outer_length() / 2)));
    const auto pairs = random_pairs(emb, k, rng);

    std::vector<long long> weight(emb.num_edges(), 1);
    for (const auto& we : data.weights) weight[edge_of(emb.find_dart(we.u, we.v))] = we.weight;

    const auto sub = subdivide_weights(data);
    const auto sub_emb = embedding_from(sub.instance);
    std::vector<TerminalPair> mapped;
    for (const auto& p : pairs) mapped.push_back({sub.new_id[p.a], sub.new_id[p.b]});
    const auto sol = solve(sub_emb, mapped, MsspMode::Reference);
    for (int i = 0; i < sol.inst.size(); ++i) {
      const auto& p = sol.inst.pairs[i];
      const auto dist = dijkstra(emb, weight, p.s);  // ids of original vertices are kept
      ++compared;
      if (dist[p.t] != sol.result.lengths[i]) ++mismatches;
    }
    if (!audit(sub_emb, sol.inst, sol.tree, sol.result, sol.paths).ok()) ++mismatches;
  }
  std::ostringstream d;
  d << kWeightedInstances << " weighted grids (weights <= " << kMaxWeight << "), " << compared
    << " pairs against Dijkstra, " << mismatches << " mismatches";
  report(9, mismatches == 0, d.str());
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  run_corpus();
  run_genealogy_golden();
  run_scaling();
  report(8, "SKIP", "mode equivalence needs the incremental MSSP mode, which is not built");
  run_weighted();
  std::printf("acceptance finished in %.1f s, %d failing criteria\n", seconds_since(t0), failures);
  return failures == 0 ? 0 : 1;
}
