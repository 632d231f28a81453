#include "ncsp/supergraph.hpp"

#include <ostream>
#include <sstream>

namespace ncsp {

std::vector<VertexId> supergraph_roots(const NormalizedInstance& inst) {
  std::vector<VertexId> roots;
  for (const auto& p : inst.pairs) {
    if (roots.empty() || roots.back() != p.s) roots.push_back(p.s);
  }
  return roots;
}

namespace {

class Builder {
 public:
  Builder(const PlanarEmbedding& emb, SupergraphTimeline& tl, const SptCursor& cursor)
      : emb_(emb), tl_(tl), cursor_(cursor) {}

  void stamp_vertex(VertexId v, int i) {
    if (tl_.vertex_stamp[v] == kNeverStamped) tl_.vertex_stamp[v] = i;
  }

  /// Backward walk on the current tree from v until it meets a stamped vertex.
  /// With `force`, the first tree edge is taken even if v is already stamped:
  /// v's parent changed in this iteration, so its new parent edge must enter X_i.
  VertexId walk_back(VertexId v, int i, bool force) {
    if (tl_.vertex_stamp[v] == kNeverStamped) {
      tl_.vertex_stamp[v] = i;
    } else if (!force) {
      return v;
    }
    VertexId cur = v;
    for (;;) {
      const DartId d = cursor_.parent_dart(cur);
      if (d == kNoDart) return cur;
      ++tl_.walk_steps;
      const EdgeId e = edge_of(d);
      if (tl_.edge_stamp[e] == kNeverStamped) {
        tl_.edge_stamp[e] = i;
        ++tl_.edges_stamped;
      }
      const VertexId p = emb_.tail(d);
      if (tl_.vertex_stamp[p] != kNeverStamped) return p;
      tl_.vertex_stamp[p] = i;
      cur = p;
    }
  }

 private:
  const PlanarEmbedding& emb_;
  SupergraphTimeline& tl_;
  const SptCursor& cursor_;
};

}  // namespace

SupergraphTimeline build_supergraphs(const PlanarEmbedding& emb, const NormalizedInstance& inst,
                                     const SptSequence& seq, HeadFilter filter) {
  SupergraphTimeline tl;
  tl.k = inst.size();
  tl.edge_stamp.assign(emb.num_edges(), kNeverStamped);
  tl.vertex_stamp.assign(emb.num_vertices(), kNeverStamped);
  tl.h_sets.resize(tl.k);
  tl.eta_log.resize(tl.k);
  if (tl.k == 0) return tl;

  if (seq.roots != supergraph_roots(inst)) {
    throw Error(ErrorKind::RootsNotClockwise, "tree sequence is not rooted at the s_i in order");
  }

  SptCursor cursor(emb, seq);
  Builder builder(emb, tl, cursor);
  for (int i = 1; i <= tl.k; ++i) {
    const auto& pair = inst.pairs[i - 1];
    auto& h_set = tl.h_sets[i - 1];
    if (i > 1 && pair.s != inst.pairs[i - 2].s) {
      cursor.advance();
      for (DartId d : seq.changes[cursor.step()].added) {
        const VertexId h = emb.head(d);
        if (filter == HeadFilter::All || tl.vertex_stamp[h] < i) h_set.push_back(h);
      }
    }
    builder.stamp_vertex(pair.s, i);
    for (VertexId h : h_set) builder.walk_back(h, i, /*force=*/true);
    const VertexId stop = builder.walk_back(pair.t, i, /*force=*/false);
    tl.eta_log[i - 1] = {pair.t, stop};
  }
  return tl;
}

std::function<bool(EdgeId)> x_membership(const SupergraphTimeline& timeline, int i) {
  return [&timeline, i](EdgeId e) { return timeline.edge_stamp[e] <= i; };
}

XRotation::XRotation(const PlanarEmbedding& emb, const SupergraphTimeline& timeline)
    : emb_(&emb), pos_(emb.num_darts(), -1), path_index_(emb.num_vertices(), -1) {
  offset_.assign(emb.num_vertices() + 1, 0);
  for (VertexId v = 0; v < emb.num_vertices(); ++v) {
    for (DartId d : emb.rotation(v)) {
      const int s = timeline.edge_stamp[edge_of(d)];
      if (s == kNeverStamped) continue;
      pos_[d] = static_cast<int>(rot_.size()) - offset_[v];
      rot_.push_back(d);
      stamp_.push_back(s);
    }
    offset_[v + 1] = static_cast<int>(rot_.size());
  }
}

DartId XRotation::turn_left(DartId d, int i) const noexcept {
  const DartId back = rev(d);
  const VertexId v = emb_->tail(back);
  const int base = offset_[v];
  const int deg = offset_[v + 1] - base;
  int q = pos_[back];
  for (int step = 1; step < deg; ++step) {
    q = q == 0 ? deg - 1 : q - 1;
    if (stamp_[base + q] <= i) return rot_[base + q];
    ++skips_;
  }
  return back;
}

DartId XRotation::turn_right(DartId d, int i) const noexcept {
  const DartId back = rev(d);
  const VertexId v = emb_->tail(back);
  const int base = offset_[v];
  const int deg = offset_[v + 1] - base;
  int q = pos_[back];
  for (int step = 1; step < deg; ++step) {
    q = q + 1 == deg ? 0 : q + 1;
    if (stamp_[base + q] <= i) return rot_[base + q];
    ++skips_;
  }
  return back;
}

namespace {

bool in_x(const std::vector<int>& pos, const std::vector<int>& stamp, const std::vector<int>& offset,
          const PlanarEmbedding& emb, DartId x, int i) {
  const int p = pos[x];
  return p >= 0 && stamp[offset[emb.tail(x)] + p] <= i;
}

}  // namespace

DartId XRotation::first_left(VertexId v, int i) const noexcept {
  const int r = emb_->outer_length();
  const DartId ref = rev(emb_->outer_darts()[(emb_->outer_position(v) + r - 1) % r]);
  DartId x = ref;
  for (int step = 0; step < emb_->degree(v); ++step) {
    x = emb_->ccw_prev(x);
    if (in_x(pos_, stamp_, offset_, *emb_, x, i)) return x;
  }
  return kNoDart;
}

DartId XRotation::first_right(VertexId v, int i) const noexcept {
  const DartId ref = emb_->outer_darts()[emb_->outer_position(v)];
  DartId x = ref;
  for (int step = 0; step < emb_->degree(v); ++step) {
    x = emb_->ccw_next(x);
    if (in_x(pos_, stamp_, offset_, *emb_, x, i)) return x;
  }
  return kNoDart;
}

WalkResult walk_in_x(const PlanarEmbedding& emb, const XRotation& xrot, int i, VertexId start,
                     VertexId target, Turn turn, const std::function<bool(DartId)>& stop) {
  WalkResult res;
  auto& index = xrot.path_index_;
  std::vector<VertexId> verts{start};
  index[start] = 0;
  const auto cleanup = [&] {
    for (VertexId v : verts) index[v] = -1;
  };

  DartId d = turn == Turn::Left ? xrot.first_left(start, i) : xrot.first_right(start, i);
  if (d == kNoDart) {
    cleanup();
    std::ostringstream os;
    os << "vertex " << start << " has no edge in X_" << i;
    throw Error(ErrorKind::WalkEscaped, os.str());
  }
  // A face boundary walk of X_i visits each dart at most once per lap.
  const std::size_t limit = 2 * xrot.darts() + 8;
  for (;;) {
    if (++res.steps > limit) {
      cleanup();
      std::ostringstream os;
      os << "walk from " << start << " in X_" << i << " never reached " << target;
      throw Error(ErrorKind::WalkEscaped, os.str());
    }
    const VertexId v = emb.head(d);
    if (index[v] >= 0) {
      // Back on the path: erase the closed excursion. The dart that closes it is
      // dropped as well.
      ++res.erased;
      const auto keep = static_cast<std::size_t>(index[v]) + 1;
      while (verts.size() > keep) {
        index[verts.back()] = -1;
        verts.pop_back();
        res.darts.pop_back();
        ++res.erased;
      }
    } else {
      if (stop && stop(d)) {
        res.stop_dart = d;
        break;
      }
      res.darts.push_back(d);
      index[v] = static_cast<int>(verts.size());
      verts.push_back(v);
      if (v == target) {
        res.reached = true;
        break;
      }
    }
    d = turn == Turn::Left ? xrot.turn_left(d, i) : xrot.turn_right(d, i);
  }
  cleanup();
  return res;
}

std::vector<VertexId> leftmost_path_in_x(const PlanarEmbedding& emb, const SupergraphTimeline& timeline,
                                         const NormalizedInstance& inst, int i) {
  const XRotation xrot(emb, timeline);
  const auto& pair = inst.pairs[i - 1];
  const auto walk = walk_in_x(emb, xrot, i, pair.s, pair.t, Turn::Left, nullptr);
  std::vector<VertexId> path{pair.s};
  for (DartId d : walk.darts) path.push_back(emb.head(d));
  return path;
}

void dump_timeline(std::ostream& out, const PlanarEmbedding& emb, const SupergraphTimeline& timeline) {
  for (EdgeId e = 0; e < emb.num_edges(); ++e) {
    if (timeline.edge_stamp[e] == kNeverStamped) continue;
    out << "edge " << emb.tail(2 * e) << ' ' << emb.head(2 * e) << ' ' << timeline.edge_stamp[e] << '\n';
  }
}

}  // namespace ncsp
