#include "ncsp/verify.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <ostream>
#include <queue>
#include <sstream>

#include "ncsp/rng.hpp"

namespace ncsp {

namespace {

std::vector<int> bfs_filtered(const PlanarEmbedding& emb, VertexId a, const std::function<bool(EdgeId)>& usable) {
  std::vector<int> dist(emb.num_vertices(), kUnreachable);
  std::deque<VertexId> queue{a};
  dist[a] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (DartId d : emb.rotation(v)) {
      const VertexId w = emb.head(d);
      if (dist[w] != kUnreachable || (usable && !usable(edge_of(d)))) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

}  // namespace

std::vector<int> bfs_all(const PlanarEmbedding& emb, VertexId a) { return bfs_filtered(emb, a, nullptr); }

std::vector<int> bfs_all(const PlanarEmbedding& emb, const RegionSubgraph& region, VertexId a) {
  if (!region.contains_vertex(a)) return std::vector<int>(emb.num_vertices(), kUnreachable);
  return bfs_filtered(emb, a, [&region](EdgeId e) { return region.contains_edge(e); });
}

int bfs_distance(const PlanarEmbedding& emb, VertexId a, VertexId b) { return bfs_all(emb, a)[b]; }

int bfs_distance(const PlanarEmbedding& emb, const RegionSubgraph& region, VertexId a, VertexId b) {
  return bfs_all(emb, region, a)[b];
}

std::vector<long long> dijkstra(const PlanarEmbedding& emb, std::span<const long long> edge_weight,
                                VertexId source) {
  constexpr long long kInf = std::numeric_limits<long long>::max();
  std::vector<long long> dist(emb.num_vertices(), kInf);
  using Item = std::pair<long long, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0;
  heap.emplace(0, source);
  while (!heap.empty()) {
    const auto [dv, v] = heap.top();
    heap.pop();
    if (dv != dist[v]) continue;
    for (DartId d : emb.rotation(v)) {
      const VertexId w = emb.head(d);
      const long long nd = dv + edge_weight[edge_of(d)];
      if (nd < dist[w]) {
        dist[w] = nd;
        heap.emplace(nd, w);
      }
    }
  }
  return dist;
}

namespace {

void require_path(const PlanarEmbedding& emb, std::span<const VertexId> p, const char* name,
                  std::vector<int>& scratch) {
  if (p.empty()) throw Error(ErrorKind::NotAPath, std::string(name) + " is empty");
  for (std::size_t j = 0; j < p.size(); ++j) {
    const VertexId v = p[j];
    if (v < 0 || v >= emb.num_vertices()) {
      throw Error(ErrorKind::NotAPath, std::string(name) + " has an out-of-range vertex");
    }
    if (scratch[v] >= 0) {
      for (std::size_t x = 0; x < j; ++x) scratch[p[x]] = -1;
      std::ostringstream os;
      os << name << " visits vertex " << v << " twice";
      throw Error(ErrorKind::NotAPath, os.str());
    }
    scratch[v] = static_cast<int>(j);
    if (j > 0 && emb.find_dart(p[j - 1], v) == kNoDart) {
      for (std::size_t x = 0; x <= j; ++x) scratch[p[x]] = -1;
      std::ostringstream os;
      os << name << " jumps from " << p[j - 1] << " to " << v;
      throw Error(ErrorKind::NotAPath, os.str());
    }
  }
  for (VertexId v : p) scratch[v] = -1;
}

// ccw distance from `ref` to `d` around their common tail.
int ccw_offset(const PlanarEmbedding& emb, DartId ref, DartId d) {
  const int deg = emb.degree(emb.tail(ref));
  return ((emb.rotation_index(d) - emb.rotation_index(ref)) % deg + deg) % deg;
}

}  // namespace

CrossingReport check_noncrossing(const PlanarEmbedding& emb, std::span<const VertexId> p,
                                 std::span<const VertexId> q) {
  std::vector<int> qpos(emb.num_vertices(), -1);
  require_path(emb, p, "first path", qpos);
  require_path(emb, q, "second path", qpos);
  for (std::size_t j = 0; j < q.size(); ++j) qpos[q[j]] = static_cast<int>(j);

  CrossingReport report;
  const int np = static_cast<int>(p.size());
  const int nq = static_cast<int>(q.size());
  int j = 0;
  while (j < np) {
    if (qpos[p[j]] < 0) {
      ++j;
      continue;
    }
    // Grow the maximal segment p[j..e] that q also walks, in either direction.
    int e = j;
    int dir = 0;
    while (e + 1 < np && qpos[p[e + 1]] >= 0) {
      const int step = qpos[p[e + 1]] - qpos[p[e]];
      if ((step != 1 && step != -1) || (dir != 0 && step != dir)) break;
      dir = step;
      ++e;
    }
    const int first = j;
    j = e + 1;
    if (first == 0 || e == np - 1) continue;
    if (dir == 0) dir = 1;
    const int qa = qpos[p[first]] - dir;  // q's neighbour beyond the segment at p[first]
    const int qb = qpos[p[e]] + dir;      // and at p[e]
    if (qa < 0 || qa >= nq || qb < 0 || qb >= nq) continue;

    const VertexId a = p[first];
    const VertexId b = p[e];
    // Contract the segment: a's darts ccw after a->p[first+1], then b's darts ccw
    // after b->p[e-1]. For a single shared vertex the order is just a's rotation.
    const auto key = [&](VertexId from, VertexId to) -> std::pair<int, int> {
      const DartId d = emb.find_dart(from, to);
      if (first == e) return {0, emb.rotation_index(d)};
      if (from == a) return {0, ccw_offset(emb, emb.find_dart(a, p[first + 1]), d)};
      return {1, ccw_offset(emb, emb.find_dart(b, p[e - 1]), d)};
    };
    std::array<std::pair<std::pair<int, int>, int>, 4> ends{{
        {key(a, p[first - 1]), 0},
        {key(b, p[e + 1]), 0},
        {key(a, q[qa]), 1},
        {key(b, q[qb]), 1},
    }};
    std::sort(ends.begin(), ends.end());
    const bool alternate = ends[0].second == ends[2].second && ends[1].second == ends[3].second &&
                           ends[0].second != ends[1].second;
    if (alternate) {
      report.crossing = true;
      report.witness = a;
      return report;
    }
  }
  return report;
}

std::vector<std::vector<DartId>> isp_faces(const PlanarEmbedding& emb, const SupergraphTimeline& timeline, int i) {
  std::vector<std::uint8_t> boundary(emb.num_edges(), 0);
  for (DartId d : emb.outer_darts()) boundary[edge_of(d)] = 1;
  auto faces = subgraph_faces(emb, [&](EdgeId e) { return boundary[e] || timeline.edge_stamp[e] <= i; });
  const DartId outer = emb.outer_darts().front();
  std::erase_if(faces, [outer](const std::vector<DartId>& f) {
    return std::find(f.begin(), f.end(), outer) != f.end();
  });
  return faces;
}

IspReport check_isp_preservation(const PlanarEmbedding& emb, const SupergraphTimeline& timeline, int i,
                                 int samples, std::uint64_t seed) {
  IspReport report;
  const auto faces = isp_faces(emb, timeline, i);
  report.faces = faces.size();
  if (faces.empty()) return report;

  const auto compare = [&](int f, const RegionSubgraph& region, VertexId a, std::span<const VertexId> bs) {
    const auto in_region = bfs_all(emb, region, a);
    const auto in_graph = bfs_all(emb, a);
    for (VertexId b : bs) {
      ++report.comparisons;
      if (in_region[b] != in_graph[b]) report.violations.push_back({i, f, a, b, in_region[b], in_graph[b]});
    }
  };

  if (samples <= 0) {
    for (std::size_t f = 0; f < faces.size(); ++f) {
      const auto region = region_of_cycle(emb, faces[f]);
      for (VertexId a : region.vertices) compare(static_cast<int>(f), region, a, region.vertices);
    }
    return report;
  }

  // Triples are drawn as (face, a) with a batch of b's so that one pair of BFS
  // runs serves several comparisons.
  constexpr int kBatch = 10;
  Rng rng(seed);
  std::map<int, RegionSubgraph> regions;
  int left = samples;
  while (left > 0) {
    const int f = static_cast<int>(rng.below(faces.size()));
    auto it = regions.find(f);
    if (it == regions.end()) it = regions.emplace(f, region_of_cycle(emb, faces[f])).first;
    const auto& verts = it->second.vertices;
    const VertexId a = verts[rng.below(verts.size())];
    std::vector<VertexId> bs;
    for (int x = 0; x < std::min(kBatch, left); ++x) bs.push_back(verts[rng.below(verts.size())]);
    left -= static_cast<int>(bs.size());
    compare(f, it->second, a, bs);
  }
  return report;
}

std::vector<VertexId> interior_leaves(const PlanarEmbedding& emb, const SupergraphTimeline& timeline, int i) {
  std::vector<int> degree(emb.num_vertices(), 0);
  for (EdgeId e = 0; e < emb.num_edges(); ++e) {
    if (timeline.edge_stamp[e] > i) continue;
    ++degree[emb.tail(2 * e)];
    ++degree[emb.head(2 * e)];
  }
  std::vector<VertexId> leaves;
  for (VertexId v = 0; v < emb.num_vertices(); ++v) {
    if (degree[v] == 1 && !emb.on_outer_face(v)) leaves.push_back(v);
  }
  return leaves;
}

bool AuditReport::ok() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.pass; });
}

AuditCheck& AuditReport::add(std::string name) {
  checks.push_back(AuditCheck{std::move(name), true, {}, 0});
  return checks.back();
}

void AuditReport::count(std::string name, std::size_t value) { counters.emplace_back(std::move(name), value); }

void write_report(std::ostream& out, const AuditReport& report) {
  for (const auto& c : report.checks) {
    out << c.name << ": " << (c.pass ? "ok" : "FAILED") << " (" << c.checked << " checked)";
    if (!c.pass) out << " - " << c.witness;
    out << '\n';
  }
  for (const auto& [name, value] : report.counters) out << name << " = " << value << '\n';
  for (const auto& c : report.checks) {
    out << "check " << c.name << ' ' << (c.pass ? "pass" : "fail");
    if (!c.pass) out << ' ' << c.witness;
    out << '\n';
  }
}

namespace {

std::vector<VertexId> vertices_of(const PlanarEmbedding& emb, VertexId start, const std::vector<DartId>& darts) {
  std::vector<VertexId> out{start};
  for (DartId d : darts) out.push_back(emb.head(d));
  return out;
}

void fail(AuditCheck& c, const std::string& witness) {
  if (!c.pass) return;  // keep the first witness
  c.pass = false;
  c.witness = witness;
}

}  // namespace

AuditReport audit(const PlanarEmbedding& emb, const NormalizedInstance& inst, const GenealogyTree& tree,
                  const UnionResult& result, const std::vector<std::vector<DartId>>& paths) {
  AuditReport report;
  const int k = inst.size();

  auto& shortest = report.add("shortestness");
  std::vector<std::vector<VertexId>> verts(k);
  for (int i = 0; i < k; ++i) {
    const auto& pair = inst.pairs[i];
    ++shortest.checked;
    const auto& darts = paths[i];
    bool chained = true;
    VertexId at = pair.s;
    for (DartId d : darts) {
      if (d < 0 || d >= emb.num_darts() || emb.tail(d) != at) {
        chained = false;
        break;
      }
      at = emb.head(d);
    }
    std::ostringstream os;
    if (!chained || at != pair.t) {
      os << "pair " << i + 1 << ": darts do not form an s-t walk";
      fail(shortest, os.str());
      continue;
    }
    verts[i] = vertices_of(emb, pair.s, darts);
    const int want = bfs_distance(emb, pair.s, pair.t);
    const int got = static_cast<int>(darts.size());
    const int reported = i < static_cast<int>(result.lengths.size()) ? result.lengths[i] : got;
    if (got != want || reported != want) {
      os << "pair " << i + 1 << " (" << pair.s << "," << pair.t << "): length " << reported << ", path " << got
         << ", distance " << want;
      fail(shortest, os.str());
    }
  }

  auto& crossing = report.add("noncrossing");
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (verts[i].empty() || verts[j].empty()) continue;
      ++crossing.checked;
      try {
        const auto c = check_noncrossing(emb, verts[i], verts[j]);
        if (c.crossing) {
          std::ostringstream os;
          os << "pairs " << i + 1 << " and " << j + 1 << " cross at vertex " << c.witness;
          fail(crossing, os.str());
        }
      } catch (const Error& e) {
        std::ostringstream os;
        os << "pairs " << i + 1 << " and " << j + 1 << ": " << e.what();
        fail(crossing, os.str());
      }
    }
  }

  // Which paths use each dart, in increasing index order.
  std::vector<std::vector<int>> users(emb.num_darts());
  for (int i = 0; i < k; ++i) {
    for (DartId d : paths[i]) {
      if (d >= 0 && d < emb.num_darts() && (users[d].empty() || users[d].back() != i)) users[d].push_back(i);
    }
  }

  auto& sibling = report.add("sibling-disjoint");
  auto& ancestor = report.add("ancestor-containment");
  std::vector<int> mark(k, -1);
  for (DartId d = 0; d < emb.num_darts(); ++d) {
    const auto& u = users[d];
    if (u.size() < 2) continue;
    for (std::size_t x = 0; x < u.size(); ++x) {
      for (std::size_t y = x + 1; y < u.size(); ++y) {
        ++sibling.checked;
        if (!tree.comparable(u[x], u[y])) {
          std::ostringstream os;
          os << "pairs " << u[x] + 1 << " and " << u[y] + 1 << " share dart " << emb.tail(d) << "->" << emb.head(d);
          fail(sibling, os.str());
        }
      }
    }
    for (int i : u) mark[i] = static_cast<int>(d);
    for (int j : u) {
      // Every pair strictly between j and a dart-sharing ancestor must also use d.
      int gap = -1;
      for (int l = tree.parent[j]; l >= 0; l = tree.parent[l]) {
        if (mark[l] == static_cast<int>(d)) {
          ++ancestor.checked;
          if (gap >= 0) {
            std::ostringstream os;
            os << "pairs " << l + 1 << " and " << j + 1 << " share dart " << emb.tail(d) << "->" << emb.head(d)
               << " but pair " << gap + 1 << " does not";
            fail(ancestor, os.str());
            break;
          }
        } else if (gap < 0) {
          gap = l;
        }
      }
    }
  }

  auto& consistency = report.add("union-consistency");
  for (DartId d = 0; d < emb.num_darts(); ++d) {
    ++consistency.checked;
    const bool in_y = d < static_cast<int>(result.y_darts.size()) && result.y_darts[d] != 0;
    if (in_y != !users[d].empty()) {
      std::ostringstream os;
      os << "dart " << emb.tail(d) << "->" << emb.head(d) << (in_y ? " is in Y but on no path" : " is on pair ")
         << (in_y ? "" : std::to_string(users[d].front() + 1) + " but not in Y");
      fail(consistency, os.str());
    }
  }

  report.count("pairs", static_cast<std::size_t>(k));
  report.count("union_darts", result.num_union_darts());
  report.count("x_darts", result.x_darts);
  report.count("walk_steps", result.walk_steps);
  report.count("skip_steps", result.skip_steps);
  report.count("erased_steps", result.erased_steps);
  return report;
}

}  // namespace ncsp
