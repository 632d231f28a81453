#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "ncsp/embedding.hpp"

namespace ncsp {

enum class MsspMode { Reference, Incremental };

struct SptTree {
  VertexId root = kNoVertex;
  /// Dart entering v from its tree parent; kNoDart at the root.
  std::vector<DartId> parent_dart;
  std::vector<std::int32_t> depth;
};

/// Hop distances from `source` over the whole graph.
std::vector<std::int32_t> bfs_depths(const PlanarEmbedding& emb, VertexId source);

/// Canonical leftmost shortest-path tree rooted at an external-face vertex.
///
/// Depths come from BFS. Parents are then assigned by a depth-first traversal
/// over tight darts (depth rises by one) that, at each vertex, tries darts in
/// clockwise order starting just after the arrival edge, i.e. leftmost first.
/// At the root the first candidate is the outer dart leaving it clockwise.
SptTree leftmost_spt(const PlanarEmbedding& emb, VertexId root);

struct ChangeSet {
  int step = 0;
  /// Darts d such that parent_dart(head(d)) becomes d at this step.
  std::vector<DartId> added;
};

/// Initial tree plus per-step parent changes. changes[0] is empty; changes[j]
/// turns the tree at roots[j-1] into the tree at roots[j].
struct SptSequence {
  MsspMode mode = MsspMode::Reference;
  std::vector<VertexId> roots;
  SptTree initial;
  std::vector<ChangeSet> changes;

  int num_steps() const noexcept { return static_cast<int>(roots.size()); }
  std::size_t total_added() const noexcept;
};

/// Throws RootNotOnOuterFace, RootsNotClockwise, or ModeUnavailable for the
/// incremental mode, which this build does not provide.
SptSequence spt_sequence(const PlanarEmbedding& emb, std::span<const VertexId> roots,
                         MsspMode mode = MsspMode::Reference);

/// Walks an SptSequence step by step keeping a single materialized parent table.
class SptCursor {
 public:
  SptCursor(const PlanarEmbedding& emb, const SptSequence& seq);

  int step() const noexcept { return step_; }
  VertexId root() const noexcept { return seq_->roots[step_]; }
  std::span<const DartId> parent_darts() const noexcept { return parent_; }
  DartId parent_dart(VertexId v) const noexcept { return parent_[v]; }

  void advance();
  /// Random access; moving backwards replays from the initial tree.
  void seek(int step);

  /// Darts from the current root to v.
  std::vector<DartId> path_to(VertexId v) const;
  /// Depths implied by the current parent table; -1 where the chain is broken.
  std::vector<std::int32_t> derived_depths() const;

 private:
  const PlanarEmbedding* emb_;
  const SptSequence* seq_;
  int step_ = 0;
  std::vector<DartId> parent_;
};

/// Root-to-v dart path in the tree at `step`.
std::vector<DartId> tree_path(SptCursor& cursor, int step, VertexId v);

/// True iff the parent table is a shortest-path tree of emb rooted at root.
bool is_valid_spt(const PlanarEmbedding& emb, std::span<const DartId> parent_dart, VertexId root);

/// `step j: +t->h +t->h ...`, one line per change set.
void dump_changes(std::ostream& out, const PlanarEmbedding& emb, const SptSequence& seq);

}  // namespace ncsp
