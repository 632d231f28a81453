#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ncsp/error.hpp"

namespace ncsp {

using VertexId = std::int32_t;
using DartId = std::int32_t;
using EdgeId = std::int32_t;
using FaceId = std::int32_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr DartId kNoDart = -1;

/// Darts of edge e are 2e (low endpoint -> high endpoint at build time) and 2e+1.
constexpr DartId rev(DartId d) noexcept { return d ^ 1; }
constexpr EdgeId edge_of(DartId d) noexcept { return d >> 1; }

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Per-vertex neighbor lists in counterclockwise order.
using RawRotations = std::vector<std::vector<VertexId>>;

/// Immutable dart-based rotation system with a distinguished external face.
///
/// Rotation lists are counterclockwise. The external face is stored as a
/// clockwise cycle, so the unbounded region lies to the left of every
/// outer dart and `face_successor_left` traces it.
class PlanarEmbedding {
 public:
  PlanarEmbedding() = default;

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(tail_.size() / 2); }
  int num_darts() const noexcept { return static_cast<int>(tail_.size()); }
  int num_faces() const noexcept { return static_cast<int>(face_offset_.size()) - 1; }

  VertexId tail(DartId d) const noexcept { return tail_[d]; }
  VertexId head(DartId d) const noexcept { return tail_[rev(d)]; }
  int degree(VertexId v) const noexcept { return rot_offset_[v + 1] - rot_offset_[v]; }

  /// Outgoing darts of v in ccw order, starting at the first neighbor of the input list.
  std::span<const DartId> rotation(VertexId v) const noexcept {
    return {rot_.data() + rot_offset_[v], static_cast<std::size_t>(degree(v))};
  }
  int rotation_index(DartId d) const noexcept { return pos_[d]; }

  DartId ccw_next(DartId d) const noexcept;
  DartId ccw_prev(DartId d) const noexcept;

  /// Next dart on the boundary of the face lying to the left of d.
  DartId face_successor_left(DartId d) const noexcept { return ccw_prev(rev(d)); }

  /// Dart u->v, or kNoDart when uv is not an edge. O(deg(u)).
  DartId find_dart(VertexId u, VertexId v) const noexcept;

  FaceId face_of(DartId d) const noexcept { return face_of_[d]; }
  std::span<const DartId> face_darts(FaceId f) const noexcept {
    return {face_darts_.data() + face_offset_[f],
            static_cast<std::size_t>(face_offset_[f + 1] - face_offset_[f])};
  }
  FaceId outer_face() const noexcept { return face_of_[outer_darts_.front()]; }

  /// Clockwise boundary of the external face: outer_vertices()[j] -> outer_vertices()[j+1]
  /// is outer_darts()[j].
  std::span<const VertexId> outer_vertices() const noexcept { return outer_vertices_; }
  std::span<const DartId> outer_darts() const noexcept { return outer_darts_; }
  /// Position on the clockwise outer cycle, or -1 for interior vertices.
  int outer_position(VertexId v) const noexcept { return outer_pos_[v]; }
  bool on_outer_face(VertexId v) const noexcept { return outer_pos_[v] >= 0; }
  int outer_length() const noexcept { return static_cast<int>(outer_vertices_.size()); }

  bool has_coords() const noexcept { return !coords_.empty(); }
  std::span<const Point> coords() const noexcept { return coords_; }

  /// Neighbor lists exactly as they were stored (ccw), for serialization.
  RawRotations raw_rotations() const;

  friend PlanarEmbedding build_embedding(const RawRotations&, std::span<const VertexId>,
                                         std::vector<Point>);

 private:
  int n_ = 0;
  std::vector<VertexId> tail_;
  std::vector<int> rot_offset_;
  std::vector<DartId> rot_;
  std::vector<int> pos_;
  std::vector<FaceId> face_of_;
  std::vector<int> face_offset_;
  std::vector<DartId> face_darts_;
  std::vector<VertexId> outer_vertices_;
  std::vector<DartId> outer_darts_;
  std::vector<int> outer_pos_;
  std::vector<Point> coords_;
};

/// Validates and builds an embedding. `outer_hint` lists the external face clockwise.
/// Throws Error with MalformedRotation, Disconnected, NotPlanar, OuterNotSimple or
/// OuterNotAFace.
PlanarEmbedding build_embedding(const RawRotations& rotations, std::span<const VertexId> outer_hint,
                                std::vector<Point> coords = {});

using DartPredicate = std::function<bool(DartId)>;

/// Leftmost continuation after arriving through d: scans ccw-predecessors of rev(d)
/// at head(d). Returns rev(d) only when it is the sole member dart, nullopt when
/// no member dart exists.
std::optional<DartId> turn_left(const PlanarEmbedding& emb, DartId d, const DartPredicate& member);
/// Mirror of turn_left, scanning ccw-successors of rev(d).
std::optional<DartId> turn_right(const PlanarEmbedding& emb, DartId d, const DartPredicate& member);

/// Face orbits of the subgraph made of the member edges (an edge is a member iff
/// both of its darts are). Vertices not touched by any member edge are ignored.
std::vector<std::vector<DartId>> subgraph_faces(const PlanarEmbedding& emb,
                                                const std::function<bool(EdgeId)>& member);

struct RegionSubgraph {
  std::vector<std::uint8_t> has_vertex;
  std::vector<std::uint8_t> has_edge;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  bool contains_vertex(VertexId v) const { return has_vertex[v] != 0; }
  bool contains_edge(EdgeId e) const { return has_edge[e] != 0; }
};

/// Region enclosed by a closed dart walk; the enclosed side is the one to the left
/// of the walk's darts. Throws NotAClosedWalk, or EnclosesOuterFace when the left
/// side contains the external face.
RegionSubgraph region_of_cycle(const PlanarEmbedding& emb, std::span<const DartId> cycle);

}  // namespace ncsp
