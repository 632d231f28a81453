#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ncsp/embedding.hpp"
#include "ncsp/supergraph.hpp"
#include "ncsp/terminals.hpp"

namespace ncsp {

/// What iteration i contributed to the union. When `complete`, sigma alone is
/// the path and tau is empty. Otherwise the path is
/// sigma, then the parent path from u to v, then tau reversed.
struct PathBundle {
  std::vector<DartId> sigma;
  std::vector<DartId> tau;
  bool complete = false;
  DartId sigma_stop = kNoDart;  ///< first dart of sigma's continuation, already in Y_{i-1}
  DartId tau_stop = kNoDart;    ///< first dart of tau's continuation, reverse already in Y_{i-1}
  VertexId u = kNoVertex;       ///< where sigma meets the parent path
  VertexId v = kNoVertex;       ///< where tau meets the parent path
};

struct UnionResult {
  std::vector<std::uint8_t> y_darts;  ///< membership table of Y_k
  std::vector<PathBundle> bundles;
  std::vector<int> lengths;  ///< filled by path_lengths

  std::size_t walk_steps = 0;  ///< sigma/tau darts traversed
  std::size_t skip_steps = 0;  ///< rotation entries skipped because they belong to a later X_j
  std::size_t erased_steps = 0;  ///< darts removed by loop erasure in the walks
  std::size_t x_darts = 0;     ///< darts of X_k

  std::size_t num_union_darts() const;
};

/// Builds Y_k with the sigma/tau walks. Throws WalkEscaped.
UnionResult extract_union(const PlanarEmbedding& emb, const SupergraphTimeline& timeline,
                          const NormalizedInstance& inst, const GenealogyTree& tree);

/// Darts of the directed s_i -> t_i path, spliced through the parent path when
/// the bundle is truncated. Recursive, without memoization; use
/// materialize_all for every path at once. Throws SpliceEndpointNotOnParent.
std::vector<DartId> materialize_path(const PlanarEmbedding& emb, const UnionResult& result,
                                     const GenealogyTree& tree, const NormalizedInstance& inst, int i);

/// All paths in one top-down pass over the genealogy tree, O(n + total length).
std::vector<std::vector<DartId>> materialize_all(const PlanarEmbedding& emb, const UnionResult& result,
                                                 const GenealogyTree& tree, const NormalizedInstance& inst);

/// Lengths of all paths; also stored into result.lengths.
std::vector<int> path_lengths(const PlanarEmbedding& emb, UnionResult& result, const GenealogyTree& tree,
                              const NormalizedInstance& inst);

std::vector<VertexId> path_vertices(const PlanarEmbedding& emb, VertexId start, const std::vector<DartId>& darts);

/// `i length s t` lines, optional `path i: v0 v1 ...` lines, then `union:` darts.
void write_result(std::ostream& out, const PlanarEmbedding& emb, const NormalizedInstance& inst,
                  const UnionResult& result, const std::vector<std::vector<DartId>>* paths);

}  // namespace ncsp
