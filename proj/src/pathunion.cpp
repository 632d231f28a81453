#include "ncsp/pathunion.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace ncsp {

std::size_t UnionResult::num_union_darts() const {
  return static_cast<std::size_t>(std::count(y_darts.begin(), y_darts.end(), 1));
}

UnionResult extract_union(const PlanarEmbedding& emb, const SupergraphTimeline& timeline,
                          const NormalizedInstance& inst, const GenealogyTree& tree) {
  (void)tree;  // the splice structure is only needed when materializing
  UnionResult result;
  const int k = inst.size();
  result.y_darts.assign(emb.num_darts(), 0);
  result.bundles.resize(k);
  if (k == 0) return result;

  const XRotation xrot(emb, timeline);
  result.x_darts = xrot.darts();
  auto& y = result.y_darts;
  const auto in_y = [&y](DartId d) { return y[d] != 0; };
  const auto rev_in_y = [&y](DartId d) { return y[rev(d)] != 0; };

  for (int i = 1; i <= k; ++i) {
    const auto& pair = inst.pairs[i - 1];
    PathBundle& bundle = result.bundles[i - 1];

    auto sigma = walk_in_x(emb, xrot, i, pair.s, pair.t, Turn::Left, in_y);
    result.walk_steps += sigma.steps;
    result.erased_steps += sigma.erased;
    bundle.sigma = std::move(sigma.darts);
    if (sigma.reached) {
      bundle.complete = true;
    } else {
      bundle.sigma_stop = sigma.stop_dart;
      bundle.u = bundle.sigma.empty() ? pair.s : emb.head(bundle.sigma.back());
      auto tau = walk_in_x(emb, xrot, i, pair.t, pair.s, Turn::Right, rev_in_y);
      result.walk_steps += tau.steps;
      result.erased_steps += tau.erased;
      if (tau.reached) {
        std::ostringstream os;
        os << "pair " << i << ": the right walk reached s_i although the left walk stopped on the union";
        throw Error(ErrorKind::SpliceEndpointNotOnParent, os.str());
      }
      bundle.tau = std::move(tau.darts);
      bundle.tau_stop = tau.stop_dart;
      bundle.v = bundle.tau.empty() ? pair.t : emb.head(bundle.tau.back());
    }
    // Y_i is committed only now: the walks of iteration i test against Y_{i-1}.
    for (DartId d : bundle.sigma) y[d] = 1;
    for (DartId d : bundle.tau) y[rev(d)] = 1;
  }
  result.skip_steps = xrot.skips();
  return result;
}

std::vector<VertexId> path_vertices(const PlanarEmbedding& emb, VertexId start, const std::vector<DartId>& darts) {
  std::vector<VertexId> out;
  out.reserve(darts.size() + 1);
  out.push_back(start);
  for (DartId d : darts) out.push_back(emb.head(d));
  return out;
}

namespace {

[[noreturn]] void splice_failure(int i, VertexId u, VertexId v, int parent) {
  std::ostringstream os;
  os << "pair " << i + 1 << ": junctions " << u << ", " << v << " are not in order on the path of pair "
     << parent + 1;
  throw Error(ErrorKind::SpliceEndpointNotOnParent, os.str());
}

std::vector<DartId> splice(const PathBundle& b, const std::vector<DartId>& parent_path, int from, int to) {
  std::vector<DartId> out;
  out.reserve(b.sigma.size() + (to - from) + b.tau.size());
  out.insert(out.end(), b.sigma.begin(), b.sigma.end());
  out.insert(out.end(), parent_path.begin() + from, parent_path.begin() + to);
  for (auto it = b.tau.rbegin(); it != b.tau.rend(); ++it) out.push_back(rev(*it));
  return out;
}

}  // namespace

std::vector<DartId> materialize_path(const PlanarEmbedding& emb, const UnionResult& result,
                                     const GenealogyTree& tree, const NormalizedInstance& inst, int i) {
  const PathBundle& b = result.bundles[i];
  if (b.complete) return b.sigma;
  const int p = tree.parent[i];
  if (p < 0) splice_failure(i, b.u, b.v, i);
  const auto parent_path = materialize_path(emb, result, tree, inst, p);
  const auto verts = path_vertices(emb, inst.pairs[p].s, parent_path);
  const auto pu = std::find(verts.begin(), verts.end(), b.u);
  const auto pv = std::find(verts.begin(), verts.end(), b.v);
  if (pu == verts.end() || pv == verts.end() || pu > pv) splice_failure(i, b.u, b.v, p);
  return splice(b, parent_path, static_cast<int>(pu - verts.begin()), static_cast<int>(pv - verts.begin()));
}

std::vector<std::vector<DartId>> materialize_all(const PlanarEmbedding& emb, const UnionResult& result,
                                                 const GenealogyTree& tree, const NormalizedInstance& inst) {
  const int k = inst.size();
  std::vector<std::vector<DartId>> paths(k);
  if (k == 0) return paths;
  const PathBundle& root = result.bundles[0];
  if (!root.complete) splice_failure(0, root.u, root.v, 0);
  paths[0] = root.sigma;

  std::vector<int> label(emb.num_vertices(), -1);
  for (int p : tree.top_down_order()) {
    if (tree.children[p].empty()) continue;
    const auto verts = path_vertices(emb, inst.pairs[p].s, paths[p]);
    for (std::size_t j = 0; j < verts.size(); ++j) label[verts[j]] = static_cast<int>(j);
    for (int c : tree.children[p]) {
      const PathBundle& b = result.bundles[c];
      if (b.complete) {
        paths[c] = b.sigma;
        continue;
      }
      const int from = label[b.u];
      const int to = label[b.v];
      if (from < 0 || to < 0 || from > to) {
        for (VertexId v : verts) label[v] = -1;
        splice_failure(c, b.u, b.v, p);
      }
      paths[c] = splice(b, paths[p], from, to);
    }
    for (VertexId v : verts) label[v] = -1;
  }
  return paths;
}

std::vector<int> path_lengths(const PlanarEmbedding& emb, UnionResult& result, const GenealogyTree& tree,
                              const NormalizedInstance& inst) {
  const auto paths = materialize_all(emb, result, tree, inst);
  result.lengths.resize(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) result.lengths[i] = static_cast<int>(paths[i].size());
  return result.lengths;
}

void write_result(std::ostream& out, const PlanarEmbedding& emb, const NormalizedInstance& inst,
                  const UnionResult& result, const std::vector<std::vector<DartId>>* paths) {
  for (int i = 0; i < inst.size(); ++i) {
    out << i + 1 << ' ' << result.lengths[i] << ' ' << inst.pairs[i].s << ' ' << inst.pairs[i].t << '\n';
  }
  if (paths != nullptr) {
    for (int i = 0; i < inst.size(); ++i) {
      out << "path " << i + 1 << ":";
      for (VertexId v : path_vertices(emb, inst.pairs[i].s, (*paths)[i])) out << ' ' << v;
      out << '\n';
    }
  }
  out << "union:";
  for (DartId d = 0; d < emb.num_darts(); ++d) {
    if (result.y_darts[d]) out << ' ' << emb.tail(d) << "->" << emb.head(d);
  }
  out << '\n';
}

}  // namespace ncsp
