// ncsp: generate, solve, verify and benchmark non-crossing shortest path instances.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "ncsp/generate.hpp"
#include "ncsp/io.hpp"
#include "ncsp/pipeline.hpp"
#include "ncsp/render.hpp"
#include "ncsp/subdivide.hpp"
#include "ncsp/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitAudit = 3;

int exit_code_for(ncsp::ErrorKind kind) {
  using ncsp::ErrorKind;
  switch (kind) {
    case ErrorKind::ParamOutOfRange:
    case ErrorKind::ModeUnavailable:
      return kExitUsage;
    case ErrorKind::WalkEscaped:
    case ErrorKind::SpliceEndpointNotOnParent:
    case ErrorKind::ImbalancedScan:
      return kExitAudit;
    default:
      return kExitInvalid;
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ncsp::Error(ncsp::ErrorKind::ParseError, "cannot write " + path);
  return out;
}

// Runs `body` with output going to `path`, or to stdout when path is empty or "-".
template <class F>
void with_output(const std::string& path, F&& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
  } else {
    auto out = open_out(path);
    body(out);
  }
}

ncsp::MsspMode parse_mode(const std::string& mode) {
  return mode == "incremental" ? ncsp::MsspMode::Incremental : ncsp::MsspMode::Reference;
}

struct Loaded {
  ncsp::InstanceData data;
  ncsp::PlanarEmbedding emb;
  std::vector<ncsp::TerminalPair> pairs;
};

Loaded load(const std::string& instance, const std::string& pairs, bool cw) {
  Loaded l;
  l.data = ncsp::read_instance_file(instance);
  l.emb = ncsp::embedding_from(l.data, cw);
  if (!pairs.empty()) l.pairs = ncsp::read_pairs_file(pairs);
  return l;
}

void print_times(std::ostream& out, const ncsp::Solution& sol) {
  out << "time normalize=" << sol.times.normalize << " mssp=" << sol.times.mssp
      << " supergraph=" << sol.times.supergraph << " union=" << sol.times.union_ << " lengths=" << sol.times.lengths
      << '\n';
}

// Weighted distances of the original pairs against the lengths found on the
// subdivided instance.
ncsp::AuditCheck check_weighted(const Loaded& original, const ncsp::Solution& sol) {
  ncsp::AuditCheck check{"weighted-distances", true, {}, 0};
  std::vector<long long> weight(original.emb.num_edges(), 1);
  for (const auto& e : original.data.weights) weight[ncsp::edge_of(original.emb.find_dart(e.u, e.v))] = e.weight;
  for (int i = 0; i < sol.inst.size(); ++i) {
    const auto& p = sol.inst.pairs[i];
    const long long want = ncsp::dijkstra(original.emb, weight, p.s)[p.t];
    ++check.checked;
    if (want != sol.result.lengths[i] && check.pass) {
      check.pass = false;
      std::ostringstream os;
      os << "pair " << i + 1 << " (" << p.s << "," << p.t << "): length " << sol.result.lengths[i]
         << ", weighted distance " << want;
      check.witness = os.str();
    }
  }
  return check;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-crossing shortest paths between terminal pairs on the external face of a planar graph"};
  app.require_subcommand(1);

  bool cw = false;
  std::string mode = "reference";
  std::uint64_t seed = 1;

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance and a pairs file");
  gen->require_subcommand(1);
  gen->fallthrough();
  std::string gen_out = "-", gen_pairs;
  int gen_k = 1;
  std::string pair_model = "random";
  gen->add_option("-o,--output", gen_out, "instance file (default stdout)");
  gen->add_option("-p,--pairs", gen_pairs, "pairs file");
  gen->add_option("-k", gen_k, "number of pairs")->check(CLI::NonNegativeNumber);
  gen->add_option("--pair-model", pair_model, "random | corner")->check(CLI::IsMember({"random", "corner"}));
  gen->add_option("--seed", seed, "random seed");
  double share = 0.0;
  gen->add_option("--share", share, "probability that consecutive terminals coincide");
  auto* gen_grid = gen->add_subcommand("grid", "W x H grid");
  int width = 3, height = 3, max_weight = 1;
  gen_grid->add_option("width", width)->required();
  gen_grid->add_option("height", height)->required();
  gen_grid->add_option("--max-weight", max_weight, "random integer edge weights in [1, w]");
  auto* gen_disk = gen->add_subcommand("disk", "random triangulated disk");
  int disk_n = 10;
  double interior = 0.5;
  gen_disk->add_option("n", disk_n)->required();
  gen_disk->add_option("--interior", interior, "fraction of interior vertices");

  // solve
  auto* solve = app.add_subcommand("solve", "compute the union of non-crossing shortest paths");
  std::string instance, pairs, result_out = "-", render, timeline_out, changes_out, genealogy_out;
  bool with_paths = false, timings = false;
  solve->add_option("instance", instance)->required()->check(CLI::ExistingFile);
  solve->add_option("pairs", pairs)->required()->check(CLI::ExistingFile);
  solve->add_option("-o,--output", result_out, "result file (default stdout)");
  solve->add_flag("--paths", with_paths, "list every path in the result");
  solve->add_option("--render", render, "write an SVG drawing (needs coordinates)");
  solve->add_option("--dump-timeline", timeline_out, "write `edge u v stamp` lines");
  solve->add_option("--dump-changes", changes_out, "write the MSSP change sets");
  solve->add_option("--dump-genealogy", genealogy_out, "write `i parent` lines");
  solve->add_flag("--timings", timings, "print phase times on stderr");

  // verify
  auto* verify = app.add_subcommand("verify", "solve and audit against independent oracles");
  int samples = 1000;
  bool exhaustive = false;
  verify->add_option("instance", instance)->required()->check(CLI::ExistingFile);
  verify->add_option("pairs", pairs)->required()->check(CLI::ExistingFile);
  verify->add_option("--samples", samples, "ISP triples sampled over the X_i");
  verify->add_flag("--exhaustive-isp", exhaustive, "check every face and vertex pair of every X_i");

  // bench
  auto* bench = app.add_subcommand("bench", "time the phases on square grids");
  std::vector<int> sides{100, 200, 400, 800};
  int reps = 3;
  std::string csv_out = "-";
  bench->add_option("--sides", sides, "grid side lengths")->delimiter(',');
  bench->add_option("--repetitions", reps, "runs per size, the minimum is reported");
  bench->add_option("-o,--output", csv_out, "CSV file (default stdout)");

  // subdivide
  auto* subdivide = app.add_subcommand("subdivide", "replace weighted edges by unit paths");
  std::string sub_out = "-", map_out;
  long long cap = 10'000'000;
  subdivide->add_option("instance", instance)->required()->check(CLI::ExistingFile);
  subdivide->add_option("-o,--output", sub_out, "unit-weight instance (default stdout)");
  subdivide->add_option("--map", map_out, "original -> new vertex ids");
  subdivide->add_option("--cap", cap, "maximum number of new vertices");

  // check
  auto* check = app.add_subcommand("check", "validate an instance and optionally a pairs file");
  check->add_option("instance", instance)->required()->check(CLI::ExistingFile);
  check->add_option("pairs", pairs)->check(CLI::ExistingFile);

  for (auto* sc : {solve, verify, bench}) {
    sc->add_option("--mode", mode, "MSSP mode")->check(CLI::IsMember({"reference", "incremental"}));
  }
  for (auto* sc : {solve, verify, check, subdivide}) {
    sc->add_flag("--cw-rotations", cw, "neighbour lists are clockwise");
  }
  for (auto* sc : {verify, bench}) sc->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      ncsp::InstanceData data;
      if (gen_grid->parsed()) {
        data = ncsp::generate_grid(width, height, max_weight, seed);
      } else {
        data = ncsp::generate_disk(disk_n, seed, interior);
      }
      // pairs first, so a bad -k fails before anything is written
      const auto emb = ncsp::embedding_from(data);
      std::vector<ncsp::TerminalPair> p;
      if (pair_model == "corner") {
        if (!gen_grid->parsed() || gen_k != 1) {
          throw ncsp::Error(ncsp::ErrorKind::ParamOutOfRange, "the corner model is one pair on a grid");
        }
        p.push_back({0, width * height - 1});
      } else {
        ncsp::Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
        p = ncsp::random_pairs(emb, gen_k, rng, share);
      }
      with_output(gen_out, [&](std::ostream& out) { ncsp::write_instance(out, data); });
      if (!gen_pairs.empty()) ncsp::write_pairs_file(gen_pairs, p);
      return kExitOk;
    }

    if (solve->parsed()) {
      const auto l = load(instance, pairs, cw);
      const auto sol = ncsp::solve(l.emb, l.pairs, parse_mode(mode));
      with_output(result_out, [&](std::ostream& out) {
        ncsp::write_result(out, l.emb, sol.inst, sol.result, with_paths ? &sol.paths : nullptr);
      });
      if (!render.empty()) {
        auto out = open_out(render);
        ncsp::render_svg(out, l.emb, sol.inst, &sol.timeline, sol.paths);
      }
      if (!timeline_out.empty()) {
        auto out = open_out(timeline_out);
        ncsp::dump_timeline(out, l.emb, sol.timeline);
      }
      if (!changes_out.empty()) {
        auto out = open_out(changes_out);
        if (sol.inst.size() > 0) {
          ncsp::dump_changes(out, l.emb, ncsp::spt_sequence(l.emb, ncsp::supergraph_roots(sol.inst), parse_mode(mode)));
        }
      }
      if (!genealogy_out.empty()) {
        auto out = open_out(genealogy_out);
        ncsp::dump_genealogy(out, sol.tree);
      }
      if (timings) print_times(std::cerr, sol);
      return kExitOk;
    }

    if (verify->parsed()) {
      const auto original = load(instance, pairs, cw);
      const bool weighted = !original.data.weights.empty();
      Loaded unit;
      if (weighted) {
        auto sub = ncsp::subdivide_weights(original.data);
        unit.emb = ncsp::embedding_from(sub.instance, cw);
      }
      const auto& emb = weighted ? unit.emb : original.emb;
      const auto sol = ncsp::solve(emb, original.pairs, parse_mode(mode));
      auto report = ncsp::audit(emb, sol.inst, sol.tree, sol.result, sol.paths);
      if (weighted) report.checks.push_back(check_weighted(original, sol));

      auto& isp = report.add("isp-preservation");
      std::size_t comparisons = 0, faces = 0;
      const int k = sol.inst.size();
      if (exhaustive) {
        if (emb.num_vertices() > 200) {
          throw ncsp::Error(ncsp::ErrorKind::ParamOutOfRange, "--exhaustive-isp is limited to n <= 200");
        }
        for (int i = 1; i <= k; ++i) {
          const auto r = ncsp::check_isp_preservation(emb, sol.timeline, i, 0, seed);
          comparisons += r.comparisons;
          faces += r.faces;
          if (!r.ok() && isp.pass) {
            const auto& v = r.violations.front();
            isp.pass = false;
            isp.witness = "X_" + std::to_string(v.i) + " face " + std::to_string(v.face) + " a=" +
                          std::to_string(v.a) + " b=" + std::to_string(v.b);
          }
        }
      } else if (k > 0 && samples > 0) {
        ncsp::Rng rng(seed);
        // Spread the samples over X_1..X_k in batches of 100 triples.
        std::map<int, int> per_i;
        for (int left = samples; left > 0; left -= 100) per_i[1 + static_cast<int>(rng.below(k))] += std::min(100, left);
        for (const auto& [i, count] : per_i) {
          const auto r = ncsp::check_isp_preservation(emb, sol.timeline, i, count, rng.next());
          comparisons += r.comparisons;
          faces += r.faces;
          if (!r.ok() && isp.pass) {
            const auto& v = r.violations.front();
            isp.pass = false;
            isp.witness = "X_" + std::to_string(v.i) + " face " + std::to_string(v.face) + " a=" +
                          std::to_string(v.a) + " b=" + std::to_string(v.b);
          }
        }
      }
      isp.checked = comparisons;
      report.count("isp_faces", faces);
      report.count("supergraph_steps", sol.timeline.walk_steps);
      report.count("edges_stamped", sol.timeline.edges_stamped);
      report.count("change_darts", sol.change_darts);
      ncsp::write_report(std::cout, report);
      return report.ok() ? kExitOk : kExitAudit;
    }

    if (bench->parsed()) {
      const auto records = ncsp::bench_grids(sides, parse_mode(mode), reps, seed);
      with_output(csv_out, [&](std::ostream& out) { ncsp::write_bench_csv(out, records); });
      return kExitOk;
    }

    if (subdivide->parsed()) {
      // Neighbour lists keep their orientation, so the output uses the input's convention.
      const auto data = ncsp::read_instance_file(instance);
      (void)ncsp::embedding_from(data, cw);
      const auto sub = ncsp::subdivide_weights(data, cap);
      (void)ncsp::embedding_from(sub.instance, cw);
      with_output(sub_out, [&](std::ostream& out) { ncsp::write_instance(out, sub.instance); });
      if (!map_out.empty()) {
        auto out = open_out(map_out);
        ncsp::write_vertex_map(out, sub);
      }
      return kExitOk;
    }

    if (check->parsed()) {
      const auto l = load(instance, pairs, cw);
      std::cout << "embedding ok: n=" << l.emb.num_vertices() << " m=" << l.emb.num_edges()
                << " faces=" << l.emb.num_faces() << " boundary=" << l.emb.outer_length() << '\n';
      if (!pairs.empty()) {
        const auto wf = ncsp::check_well_formed(l.emb, l.pairs);
        if (!wf.ok) {
          std::cout << "pairs not well formed: " << wf.violation->first + 1 << " and " << wf.violation->second + 1
                    << " interleave\n";
          return kExitInvalid;
        }
        const auto inst = ncsp::normalize(l.emb, l.pairs);
        std::cout << "pairs ok: k=" << inst.size() << '\n';
        ncsp::dump_genealogy(std::cout, ncsp::genealogy(inst));
      }
      return kExitOk;
    }
  } catch (const ncsp::Error& e) {
    std::cerr << "error [" << ncsp::to_string(e.kind()) << "]: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitUsage;
}
