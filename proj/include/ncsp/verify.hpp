#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ncsp/embedding.hpp"
#include "ncsp/pathunion.hpp"
#include "ncsp/supergraph.hpp"
#include "ncsp/terminals.hpp"

// Oracles in this header only look at adjacency and rotation order of the
// embedding; they never call into the solver.

namespace ncsp {

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Hop distances from a over all of emb.
std::vector<int> bfs_all(const PlanarEmbedding& emb, VertexId a);
/// Hop distances from a using only the edges of `region`.
std::vector<int> bfs_all(const PlanarEmbedding& emb, const RegionSubgraph& region, VertexId a);

int bfs_distance(const PlanarEmbedding& emb, VertexId a, VertexId b);
int bfs_distance(const PlanarEmbedding& emb, const RegionSubgraph& region, VertexId a, VertexId b);

/// Weighted distances; `edge_weight` is indexed by EdgeId and must be positive.
std::vector<long long> dijkstra(const PlanarEmbedding& emb, std::span<const long long> edge_weight, VertexId source);

struct CrossingReport {
  bool crossing = false;
  VertexId witness = kNoVertex;  ///< first vertex of the crossing shared segment
};

/// Decides whether two simple paths, given as vertex sequences, cross. Every
/// maximal shared segment is contracted to a point; the paths cross there iff
/// their continuations alternate in the rotation around that point. Segments
/// containing an endpoint of either path never count. Throws NotAPath.
CrossingReport check_noncrossing(const PlanarEmbedding& emb, std::span<const VertexId> p,
                                 std::span<const VertexId> q);

struct IspViolation {
  int i = 0;
  int face = 0;
  VertexId a = kNoVertex;
  VertexId b = kNoVertex;
  int region_distance = 0;
  int graph_distance = 0;
};

struct IspReport {
  std::size_t faces = 0;        ///< bounded faces of X_i ∪ f∞ examined
  std::size_t comparisons = 0;  ///< (a, b) distance pairs compared
  std::vector<IspViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Bounded faces of X_i together with the outer cycle, as dart orbits.
std::vector<std::vector<DartId>> isp_faces(const PlanarEmbedding& emb, const SupergraphTimeline& timeline, int i);

/// For `samples` random (face, a, b) triples of X_i ∪ f∞ compares the distance
/// inside the region of the face with the distance in G. samples <= 0 checks
/// every face and every vertex pair exhaustively.
IspReport check_isp_preservation(const PlanarEmbedding& emb, const SupergraphTimeline& timeline, int i,
                                 int samples, std::uint64_t seed);

/// Interior vertices of degree one in X_i ∪ f∞. Empty when every dangling end
/// lies on the external face.
std::vector<VertexId> interior_leaves(const PlanarEmbedding& emb, const SupergraphTimeline& timeline, int i);

struct AuditCheck {
  std::string name;
  bool pass = true;
  std::string witness;
  std::size_t checked = 0;
};

struct AuditReport {
  std::vector<AuditCheck> checks;
  std::vector<std::pair<std::string, std::size_t>> counters;

  bool ok() const noexcept;
  AuditCheck& add(std::string name);
  void count(std::string name, std::size_t value);
};

/// Human-readable report followed by one `check <name> pass|fail <witness>` line per check.
void write_report(std::ostream& out, const AuditReport& report);

/// Shortestness, pairwise non-crossing, sibling dart-disjointness, ancestor
/// containment and union consistency of a solved instance. `paths` are the
/// materialized directed paths (darts), index-aligned with inst.pairs.
AuditReport audit(const PlanarEmbedding& emb, const NormalizedInstance& inst, const GenealogyTree& tree,
                  const UnionResult& result, const std::vector<std::vector<DartId>>& paths);

}  // namespace ncsp
