#pragma once

#include <climits>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <utility>
#include <vector>

#include "ncsp/embedding.hpp"
#include "ncsp/mssp.hpp"
#include "ncsp/terminals.hpp"

namespace ncsp {

inline constexpr int kNeverStamped = INT_MAX;

/// X_1 ⊆ X_2 ⊆ ... ⊆ X_k encoded by the iteration at which each edge and vertex
/// first entered. Iterations are 1-based: X_i is every edge with stamp <= i.
struct SupergraphTimeline {
  int k = 0;
  std::vector<int> edge_stamp;
  std::vector<int> vertex_stamp;
  /// h_sets[i-1]: heads of darts added between the trees at s_{i-1} and s_i
  /// that passed the HeadFilter.
  std::vector<std::vector<VertexId>> h_sets;
  /// eta_log[i-1]: (t_i, vertex where the backward walk from t_i stopped).
  std::vector<std::pair<VertexId, VertexId>> eta_log;

  std::size_t walk_steps = 0;
  std::size_t edges_stamped = 0;

  bool edge_in(EdgeId e, int i) const noexcept { return edge_stamp[e] <= i; }
  bool dart_in(DartId d, int i) const noexcept { return edge_stamp[edge_of(d)] <= i; }
  bool vertex_in(VertexId v, int i) const noexcept { return vertex_stamp[v] <= i; }
};

/// Which changed vertices start a backward walk in iteration i.
enum class HeadFilter {
  /// Only heads that already belong to X_{i-1}. Every walk then joins two
  /// vertices of the subgraph and no interior dead ends appear.
  InPrevious,
  /// Every head of an added dart. Grows branches that end at fresh interior
  /// vertices; kept for comparison only, it breaks shortestness.
  All,
};

/// Runs the supergraph construction. `seq` must be rooted at the distinct s_i in
/// order (see supergraph_roots).
SupergraphTimeline build_supergraphs(const PlanarEmbedding& emb, const NormalizedInstance& inst,
                                     const SptSequence& seq, HeadFilter filter = HeadFilter::InPrevious);

/// Distinct s_i in index order, i.e. the roots the tree sequence has to cover.
std::vector<VertexId> supergraph_roots(const NormalizedInstance& inst);

/// O(1) membership predicate for the edges of X_i. i = 0 is the empty graph.
std::function<bool(EdgeId)> x_membership(const SupergraphTimeline& timeline, int i);

enum class Turn { Left, Right };

struct WalkResult {
  std::vector<DartId> darts;  ///< simple path from the start vertex
  bool reached = false;       ///< true iff the path ends at the target
  DartId stop_dart = kNoDart; ///< rejected dart that ended the walk early
  std::size_t steps = 0;      ///< darts traversed, including erased excursions
  std::size_t erased = 0;     ///< darts dropped by loop erasure
};

/// Rotation lists restricted to X_k, with the stamp of every entry so that
/// X_i lookups skip later edges.
class XRotation {
 public:
  XRotation(const PlanarEmbedding& emb, const SupergraphTimeline& timeline);

  /// Leftmost/rightmost continuation in X_i after arriving through d (a dart of X_i).
  /// Same contract as turn_left/turn_right, including the dead-end U-turn.
  DartId turn_left(DartId d, int i) const noexcept;
  DartId turn_right(DartId d, int i) const noexcept;

  /// First dart of a walk starting at an outer vertex, as if it had arrived from
  /// the external face: leftmost starts along the clockwise boundary side,
  /// rightmost along the counterclockwise side. kNoDart if v has no X_i edge.
  DartId first_left(VertexId v, int i) const noexcept;
  DartId first_right(VertexId v, int i) const noexcept;

  std::size_t darts() const noexcept { return rot_.size(); }
  std::size_t skips() const noexcept { return skips_; }
  void reset_skips() const noexcept { skips_ = 0; }

 private:
  const PlanarEmbedding* emb_;
  std::vector<int> offset_;
  std::vector<DartId> rot_;
  std::vector<int> stamp_;
  std::vector<int> pos_;  // index of a dart inside its tail's restricted list
  mutable std::vector<int> path_index_;  // walk scratch, all -1 between walks
  mutable std::size_t skips_ = 0;

  friend WalkResult walk_in_x(const PlanarEmbedding&, const XRotation&, int, VertexId, VertexId, Turn,
                              const std::function<bool(DartId)>&);
};

/// Always-turn-left (or right) walk in X_i from `start` towards `target`.
///
/// Excursions that come back to a vertex already on the path (dead-end
/// U-turns, loops around blocks hanging off a cut vertex) are erased as they
/// close, so `darts` is always a simple path. Before extending the path with a
/// dart d, `stop(d)` is consulted; if it returns true the walk ends with
/// stop_dart = d. Throws WalkEscaped if the walk cannot reach the target.
WalkResult walk_in_x(const PlanarEmbedding& emb, const XRotation& xrot, int i, VertexId start,
                     VertexId target, Turn turn, const std::function<bool(DartId)>& stop);

/// The s_i -> t_i path in X_i that always turns left, as a vertex sequence.
std::vector<VertexId> leftmost_path_in_x(const PlanarEmbedding& emb, const SupergraphTimeline& timeline,
                                         const NormalizedInstance& inst, int i);

/// `edge u v stamp` for every stamped edge, in edge order.
void dump_timeline(std::ostream& out, const PlanarEmbedding& emb, const SupergraphTimeline& timeline);

}  // namespace ncsp
