#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ncsp/embedding.hpp"
#include "ncsp/io.hpp"

namespace ncsp {

/// Outcome of the parenthesis scan. `violation` holds two interleaving input
/// pair indices (0-based, smaller first) when the pairs are not well formed.
struct WellFormedness {
  bool ok = true;
  std::optional<std::pair<int, int>> violation;
};

/// Decides whether the boundary arcs of the pairs are pairwise nested or
/// edge-disjoint with one balanced-parenthesis scan of the outer cycle.
/// Throws TerminalNotOnBoundary, DegeneratePair (a == b) or DuplicatePair.
WellFormedness check_well_formed(const PlanarEmbedding& emb, std::span<const TerminalPair> pairs);

struct OrientedPair {
  VertexId s = kNoVertex;
  VertexId t = kNoVertex;
  int input_index = -1;
};

/// Pairs oriented so that no clockwise s->t boundary walk uses e_star, with the
/// pair whose walk is free of other terminals first and the rest ordered by the
/// clockwise position of s after e_star (outer pair first on ties).
struct NormalizedInstance {
  std::vector<OrientedPair> pairs;
  DartId e_star = kNoDart;  ///< clockwise outer dart
  /// Position of every outer vertex in the clockwise order that starts at head(e_star).
  std::vector<int> linear_pos;

  int size() const noexcept { return static_cast<int>(pairs.size()); }
  int pos(VertexId v) const noexcept { return linear_pos[v]; }
  /// True iff v lies on the clockwise s_i->t_i walk, endpoints excluded.
  bool strictly_inside(int i, VertexId v) const noexcept;
};

/// Throws NotWellFormed (with the witness in the message) besides the errors of
/// check_well_formed. k = 0 yields an empty instance.
NormalizedInstance normalize(const PlanarEmbedding& emb, std::span<const TerminalPair> pairs);

/// Re-checks every NormalizedInstance invariant by direct scans; returns an empty
/// string on success, otherwise a description of the first failure.
std::string check_normalized(const PlanarEmbedding& emb, const NormalizedInstance& inst);

struct GenealogyTree {
  std::vector<int> parent;  ///< -1 at the root (index 0)
  std::vector<std::vector<int>> children;
  /// Euler-tour bounds for O(1) ancestor tests.
  std::vector<int> enter;
  std::vector<int> leave;

  int size() const noexcept { return static_cast<int>(parent.size()); }
  /// True iff a is a strict ancestor of b.
  bool is_ancestor(int a, int b) const noexcept {
    return a != b && enter[a] <= enter[b] && leave[b] <= leave[a];
  }
  bool comparable(int a, int b) const noexcept { return is_ancestor(a, b) || is_ancestor(b, a); }
  /// Indices in breadth-first order from the root.
  std::vector<int> top_down_order() const;
};

/// Stack scan of the boundary: push at s_i, pop at t_i. Throws ImbalancedScan.
GenealogyTree genealogy(const NormalizedInstance& inst);

/// `i parent(i)` lines, 1-based, root parent 0.
void dump_genealogy(std::ostream& out, const GenealogyTree& tree);

}  // namespace ncsp
