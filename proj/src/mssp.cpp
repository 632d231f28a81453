#include "ncsp/mssp.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace ncsp {

std::vector<std::int32_t> bfs_depths(const PlanarEmbedding& emb, VertexId source) {
  std::vector<std::int32_t> depth(emb.num_vertices(), -1);
  std::vector<VertexId> queue;
  queue.reserve(emb.num_vertices());
  depth[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    for (DartId d : emb.rotation(u)) {
      const VertexId v = emb.head(d);
      if (depth[v] < 0) {
        depth[v] = depth[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return depth;
}

namespace {

void require_outer(const PlanarEmbedding& emb, VertexId root) {
  if (root < 0 || root >= emb.num_vertices() || !emb.on_outer_face(root)) {
    std::ostringstream os;
    os << "vertex " << root << " is not on the external face";
    throw Error(ErrorKind::RootNotOnOuterFace, os.str());
  }
}

/// Dart from v back to its counterclockwise neighbor on the outer cycle.
DartId outer_back_dart(const PlanarEmbedding& emb, VertexId v) {
  const int r = emb.outer_length();
  const int p = emb.outer_position(v);
  return rev(emb.outer_darts()[(p + r - 1) % r]);
}

struct Frame {
  const DartId* rot;  // rotation of the frame's vertex
  int deg;
  int index;  // rotation index of the last dart tried
  int remaining;
  std::int32_t child_depth;
};

}  // namespace

SptTree leftmost_spt(const PlanarEmbedding& emb, VertexId root) {
  require_outer(emb, root);
  SptTree tree;
  tree.root = root;
  tree.depth = bfs_depths(emb, root);
  tree.parent_dart.assign(emb.num_vertices(), kNoDart);

  std::vector<std::uint8_t> visited(emb.num_vertices(), 0);
  std::vector<Frame> stack;
  const auto push = [&](VertexId v, DartId back) {
    stack.push_back({emb.rotation(v).data(), emb.degree(v), emb.rotation_index(back), emb.degree(v),
                     tree.depth[v] + 1});
  };
  visited[root] = 1;
  // Scanning ccw-predecessors of the back dart visits the clockwise outer dart first.
  push(root, outer_back_dart(emb, root));
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.remaining == 0) {
      stack.pop_back();
      continue;
    }
    top.index = top.index == 0 ? top.deg - 1 : top.index - 1;
    --top.remaining;
    const DartId d = top.rot[top.index];
    const VertexId w = emb.head(d);
    if (visited[w] || tree.depth[w] != top.child_depth) continue;
    visited[w] = 1;
    tree.parent_dart[w] = d;
    push(w, rev(d));
  }
  return tree;
}

std::size_t SptSequence::total_added() const noexcept {
  std::size_t total = 0;
  for (const auto& c : changes) total += c.added.size();
  return total;
}

SptSequence spt_sequence(const PlanarEmbedding& emb, std::span<const VertexId> roots, MsspMode mode) {
  if (mode == MsspMode::Incremental) {
    throw Error(ErrorKind::ModeUnavailable, "the incremental MSSP mode is not built; use reference");
  }
  if (roots.empty()) throw Error(ErrorKind::RootsNotClockwise, "empty root list");
  for (VertexId v : roots) require_outer(emb, v);

  // Distinct and clockwise: the cyclic gaps between consecutive roots must add
  // up to less than one full turn.
  const long long r = emb.outer_length();
  long long turn = 0;
  for (std::size_t j = 0; j + 1 < roots.size(); ++j) {
    const long long gap =
        ((emb.outer_position(roots[j + 1]) - emb.outer_position(roots[j])) % r + r) % r;
    if (gap == 0) throw Error(ErrorKind::RootsNotClockwise, "repeated root");
    turn += gap;
  }
  if (turn >= r) throw Error(ErrorKind::RootsNotClockwise, "roots wrap around the external face more than once");

  SptSequence seq;
  seq.mode = mode;
  seq.roots.assign(roots.begin(), roots.end());
  seq.initial = leftmost_spt(emb, roots.front());
  seq.changes.resize(roots.size());
  std::vector<DartId> prev = seq.initial.parent_dart;
  for (std::size_t j = 1; j < roots.size(); ++j) {
    SptTree next = leftmost_spt(emb, roots[j]);
    ChangeSet& cs = seq.changes[j];
    cs.step = static_cast<int>(j);
    for (VertexId v = 0; v < emb.num_vertices(); ++v) {
      if (next.parent_dart[v] != prev[v] && next.parent_dart[v] != kNoDart) {
        cs.added.push_back(next.parent_dart[v]);
      }
    }
    prev = std::move(next.parent_dart);
  }
  return seq;
}

SptCursor::SptCursor(const PlanarEmbedding& emb, const SptSequence& seq)
    : emb_(&emb), seq_(&seq), parent_(seq.initial.parent_dart) {}

void SptCursor::advance() {
  ++step_;
  for (DartId d : seq_->changes[step_].added) parent_[emb_->head(d)] = d;
  parent_[seq_->roots[step_]] = kNoDart;
}

void SptCursor::seek(int step) {
  if (step < step_) {
    parent_ = seq_->initial.parent_dart;
    step_ = 0;
  }
  while (step_ < step) advance();
}

std::vector<DartId> SptCursor::path_to(VertexId v) const {
  std::vector<DartId> path;
  for (DartId d = parent_[v]; d != kNoDart; d = parent_[emb_->tail(d)]) {
    path.push_back(d);
    if (path.size() > static_cast<std::size_t>(emb_->num_vertices())) {
      throw Error(ErrorKind::WalkEscaped, "parent table contains a cycle");
    }
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::int32_t> SptCursor::derived_depths() const {
  const int n = emb_->num_vertices();
  std::vector<std::int32_t> depth(n, -2);  // -2 unknown, -1 broken
  depth[root()] = 0;
  std::vector<VertexId> chain;
  for (VertexId v = 0; v < n; ++v) {
    VertexId u = v;
    chain.clear();
    while (depth[u] == -2) {
      chain.push_back(u);
      const DartId d = parent_[u];
      if (d == kNoDart || chain.size() > static_cast<std::size_t>(n)) {
        depth[u] = -1;
        break;
      }
      u = emb_->tail(d);
    }
    std::int32_t base = depth[u];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      if (*it == u) continue;
      base = base < 0 ? -1 : base + 1;
      depth[*it] = base;
    }
  }
  return depth;
}

std::vector<DartId> tree_path(SptCursor& cursor, int step, VertexId v) {
  cursor.seek(step);
  return cursor.path_to(v);
}

bool is_valid_spt(const PlanarEmbedding& emb, std::span<const DartId> parent_dart, VertexId root) {
  const int n = emb.num_vertices();
  if (static_cast<int>(parent_dart.size()) != n || parent_dart[root] != kNoDart) return false;
  const auto bfs = bfs_depths(emb, root);
  for (VertexId v = 0; v < n; ++v) {
    if (v == root) continue;
    const DartId d = parent_dart[v];
    if (d == kNoDart || emb.head(d) != v) return false;
    if (bfs[emb.tail(d)] + 1 != bfs[v]) return false;
  }
  return true;
}

void dump_changes(std::ostream& out, const PlanarEmbedding& emb, const SptSequence& seq) {
  for (int j = 1; j < seq.num_steps(); ++j) {
    out << "step " << j << ":";
    for (DartId d : seq.changes[j].added) out << " +" << emb.tail(d) << "->" << emb.head(d);
    out << '\n';
  }
}

}  // namespace ncsp
