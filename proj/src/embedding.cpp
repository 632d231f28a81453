#include "ncsp/embedding.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace ncsp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedRotation: return "MalformedRotation";
    case ErrorKind::NotPlanar: return "NotPlanar";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::OuterNotAFace: return "OuterNotAFace";
    case ErrorKind::OuterNotSimple: return "OuterNotSimple";
    case ErrorKind::NotAClosedWalk: return "NotAClosedWalk";
    case ErrorKind::EnclosesOuterFace: return "EnclosesOuterFace";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::RootNotOnOuterFace: return "RootNotOnOuterFace";
    case ErrorKind::RootsNotClockwise: return "RootsNotClockwise";
    case ErrorKind::ModeUnavailable: return "ModeUnavailable";
    case ErrorKind::TerminalNotOnBoundary: return "TerminalNotOnBoundary";
    case ErrorKind::DegeneratePair: return "DegeneratePair";
    case ErrorKind::DuplicatePair: return "DuplicatePair";
    case ErrorKind::NotWellFormed: return "NotWellFormed";
    case ErrorKind::ImbalancedScan: return "ImbalancedScan";
    case ErrorKind::WalkEscaped: return "WalkEscaped";
    case ErrorKind::SpliceEndpointNotOnParent: return "SpliceEndpointNotOnParent";
    case ErrorKind::NotAPath: return "NotAPath";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::WeightCapExceeded: return "WeightCapExceeded";
  }
  return "Unknown";
}

DartId PlanarEmbedding::ccw_next(DartId d) const noexcept {
  const VertexId v = tail_[d];
  const int deg = degree(v);
  const int p = pos_[d] + 1;
  return rot_[rot_offset_[v] + (p == deg ? 0 : p)];
}

DartId PlanarEmbedding::ccw_prev(DartId d) const noexcept {
  const VertexId v = tail_[d];
  const int p = pos_[d];
  return rot_[rot_offset_[v] + (p == 0 ? degree(v) - 1 : p - 1)];
}

DartId PlanarEmbedding::find_dart(VertexId u, VertexId v) const noexcept {
  for (DartId d : rotation(u)) {
    if (head(d) == v) return d;
  }
  return kNoDart;
}

RawRotations PlanarEmbedding::raw_rotations() const {
  RawRotations out(n_);
  for (VertexId v = 0; v < n_; ++v) {
    out[v].reserve(degree(v));
    for (DartId d : rotation(v)) out[v].push_back(head(d));
  }
  return out;
}

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

std::uint64_t pair_key(VertexId u, VertexId v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

}  // namespace

PlanarEmbedding build_embedding(const RawRotations& rotations, std::span<const VertexId> outer_hint,
                                std::vector<Point> coords) {
  PlanarEmbedding emb;
  const int n = static_cast<int>(rotations.size());
  if (n < 3) fail(ErrorKind::MalformedRotation, "need at least 3 vertices");
  emb.n_ = n;

  // Edge ids follow (low endpoint, position in its list), so rebuilding from the
  // same lists always reproduces the same dart numbering.
  std::unordered_map<std::uint64_t, DartId> dart_of;
  std::size_t total = 0;
  for (VertexId u = 0; u < n; ++u) total += rotations[u].size();
  if (total % 2 != 0) fail(ErrorKind::MalformedRotation, "odd number of adjacency entries");
  dart_of.reserve(total * 2);
  emb.tail_.assign(total, kNoVertex);

  EdgeId next_edge = 0;
  std::vector<VertexId> listed_by(n, kNoVertex);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : rotations[u]) {
      if (v < 0 || v >= n) {
        std::ostringstream os;
        os << "vertex " << u << " lists out-of-range neighbor " << v;
        fail(ErrorKind::MalformedRotation, os.str());
      }
      if (v == u) {
        std::ostringstream os;
        os << "self-loop at vertex " << u;
        fail(ErrorKind::MalformedRotation, os.str());
      }
      if (listed_by[v] == u) {
        std::ostringstream os;
        os << "parallel edge " << u << "-" << v;
        fail(ErrorKind::MalformedRotation, os.str());
      }
      listed_by[v] = u;
      if (u < v) {
        if (static_cast<std::size_t>(2 * next_edge + 1) >= total) {
          fail(ErrorKind::MalformedRotation, "adjacency lists are not symmetric");
        }
        const DartId d = 2 * next_edge;
        emb.tail_[d] = u;
        emb.tail_[d + 1] = v;
        dart_of[pair_key(u, v)] = d;
        dart_of[pair_key(v, u)] = d + 1;
        ++next_edge;
      }
    }
  }
  if (static_cast<std::size_t>(2 * next_edge) != total) {
    fail(ErrorKind::MalformedRotation, "adjacency lists are not symmetric");
  }

  emb.rot_offset_.assign(n + 1, 0);
  for (VertexId u = 0; u < n; ++u) {
    emb.rot_offset_[u + 1] = emb.rot_offset_[u] + static_cast<int>(rotations[u].size());
  }
  emb.rot_.assign(total, kNoDart);
  emb.pos_.assign(total, -1);
  for (VertexId u = 0; u < n; ++u) {
    for (std::size_t j = 0; j < rotations[u].size(); ++j) {
      const VertexId v = rotations[u][j];
      auto it = dart_of.find(pair_key(u, v));
      auto back = dart_of.find(pair_key(v, u));
      if (it == dart_of.end() || back == dart_of.end()) {
        std::ostringstream os;
        os << "edge " << u << "-" << v << " missing from the list of " << v;
        fail(ErrorKind::MalformedRotation, os.str());
      }
      emb.rot_[emb.rot_offset_[u] + j] = it->second;
      emb.pos_[it->second] = static_cast<int>(j);
    }
  }
  for (std::size_t d = 0; d < total; ++d) {
    if (emb.pos_[d] < 0) fail(ErrorKind::MalformedRotation, "adjacency lists are not symmetric");
  }

  // Connectivity.
  {
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      for (DartId d : emb.rotation(u)) {
        const VertexId v = emb.head(d);
        if (!seen[v]) {
          seen[v] = 1;
          ++count;
          stack.push_back(v);
        }
      }
    }
    if (count != n) {
      std::ostringstream os;
      os << "only " << count << " of " << n << " vertices reachable from vertex 0";
      fail(ErrorKind::Disconnected, os.str());
    }
  }

  // Face orbits.
  emb.face_of_.assign(total, -1);
  emb.face_offset_.assign(1, 0);
  emb.face_darts_.reserve(total);
  for (DartId start = 0; start < static_cast<DartId>(total); ++start) {
    if (emb.face_of_[start] >= 0) continue;
    const FaceId f = static_cast<FaceId>(emb.face_offset_.size()) - 1;
    DartId d = start;
    do {
      emb.face_of_[d] = f;
      emb.face_darts_.push_back(d);
      d = emb.face_successor_left(d);
    } while (d != start);
    emb.face_offset_.push_back(static_cast<int>(emb.face_darts_.size()));
  }
  const int m = static_cast<int>(total / 2);
  const int f = emb.num_faces();
  if (n - m + f != 2) {
    std::ostringstream os;
    os << "Euler check failed: n - m + f = " << n << " - " << m << " + " << f << " != 2";
    fail(ErrorKind::NotPlanar, os.str());
  }

  // External face.
  const int r = static_cast<int>(outer_hint.size());
  if (r < 3) fail(ErrorKind::OuterNotSimple, "external face must be a cycle of length >= 3");
  emb.outer_pos_.assign(n, -1);
  for (int j = 0; j < r; ++j) {
    const VertexId v = outer_hint[j];
    if (v < 0 || v >= n) fail(ErrorKind::OuterNotAFace, "outer vertex out of range");
    if (emb.outer_pos_[v] >= 0) {
      std::ostringstream os;
      os << "vertex " << v << " appears twice on the external face";
      fail(ErrorKind::OuterNotSimple, os.str());
    }
    emb.outer_pos_[v] = j;
  }
  emb.outer_vertices_.assign(outer_hint.begin(), outer_hint.end());
  emb.outer_darts_.resize(r);
  for (int j = 0; j < r; ++j) {
    const VertexId u = outer_hint[j];
    const VertexId v = outer_hint[(j + 1) % r];
    auto it = dart_of.find(pair_key(u, v));
    if (it == dart_of.end()) {
      std::ostringstream os;
      os << "outer sequence uses non-edge " << u << "-" << v;
      fail(ErrorKind::OuterNotAFace, os.str());
    }
    emb.outer_darts_[j] = it->second;
  }
  for (int j = 0; j < r; ++j) {
    if (emb.face_successor_left(emb.outer_darts_[j]) != emb.outer_darts_[(j + 1) % r]) {
      std::ostringstream os;
      os << "outer sequence is not a clockwise face boundary at vertex " << outer_hint[(j + 1) % r];
      fail(ErrorKind::OuterNotAFace, os.str());
    }
  }

  if (!coords.empty() && static_cast<int>(coords.size()) != n) {
    fail(ErrorKind::MalformedRotation, "coordinate count differs from vertex count");
  }
  emb.coords_ = std::move(coords);
  return emb;
}

std::optional<DartId> turn_left(const PlanarEmbedding& emb, DartId d, const DartPredicate& member) {
  const DartId back = rev(d);
  for (DartId x = emb.ccw_prev(back); x != back; x = emb.ccw_prev(x)) {
    if (member(x)) return x;
  }
  if (member(back)) return back;
  return std::nullopt;
}

std::optional<DartId> turn_right(const PlanarEmbedding& emb, DartId d, const DartPredicate& member) {
  const DartId back = rev(d);
  for (DartId x = emb.ccw_next(back); x != back; x = emb.ccw_next(x)) {
    if (member(x)) return x;
  }
  if (member(back)) return back;
  return std::nullopt;
}

std::vector<std::vector<DartId>> subgraph_faces(const PlanarEmbedding& emb,
                                                const std::function<bool(EdgeId)>& member) {
  const auto dart_member = [&](DartId x) { return member(edge_of(x)); };
  std::vector<std::uint8_t> seen(emb.num_darts(), 0);
  std::vector<std::vector<DartId>> faces;
  for (DartId start = 0; start < emb.num_darts(); ++start) {
    if (seen[start] || !member(edge_of(start))) continue;
    std::vector<DartId> orbit;
    DartId d = start;
    do {
      seen[d] = 1;
      orbit.push_back(d);
      d = *turn_left(emb, d, dart_member);
    } while (d != start);
    faces.push_back(std::move(orbit));
  }
  return faces;
}

RegionSubgraph region_of_cycle(const PlanarEmbedding& emb, std::span<const DartId> cycle) {
  if (cycle.empty()) fail(ErrorKind::NotAClosedWalk, "empty walk");
  for (std::size_t j = 0; j < cycle.size(); ++j) {
    const DartId d = cycle[j];
    if (d < 0 || d >= emb.num_darts()) fail(ErrorKind::NotAClosedWalk, "dart out of range");
    const DartId next = cycle[(j + 1) % cycle.size()];
    if (next < 0 || next >= emb.num_darts() || emb.head(d) != emb.tail(next)) {
      std::ostringstream os;
      os << "walk breaks after dart " << emb.tail(d) << "->" << emb.head(d);
      fail(ErrorKind::NotAClosedWalk, os.str());
    }
  }

  std::vector<std::uint8_t> barrier(emb.num_edges(), 0);
  for (DartId d : cycle) barrier[edge_of(d)] = 1;

  std::vector<std::uint8_t> face_in(emb.num_faces(), 0);
  std::deque<FaceId> queue;
  for (DartId d : cycle) {
    const FaceId f = emb.face_of(d);
    if (!face_in[f]) {
      face_in[f] = 1;
      queue.push_back(f);
    }
  }
  while (!queue.empty()) {
    const FaceId f = queue.front();
    queue.pop_front();
    if (f == emb.outer_face()) {
      fail(ErrorKind::EnclosesOuterFace, "the left side of the walk contains the external face");
    }
    for (DartId x : emb.face_darts(f)) {
      if (barrier[edge_of(x)]) continue;
      const FaceId g = emb.face_of(rev(x));
      if (!face_in[g]) {
        face_in[g] = 1;
        queue.push_back(g);
      }
    }
  }

  RegionSubgraph region;
  region.has_vertex.assign(emb.num_vertices(), 0);
  region.has_edge.assign(emb.num_edges(), 0);
  for (FaceId f = 0; f < emb.num_faces(); ++f) {
    if (!face_in[f]) continue;
    for (DartId x : emb.face_darts(f)) {
      if (!region.has_edge[edge_of(x)]) {
        region.has_edge[edge_of(x)] = 1;
        region.edges.push_back(edge_of(x));
      }
      if (!region.has_vertex[emb.tail(x)]) {
        region.has_vertex[emb.tail(x)] = 1;
        region.vertices.push_back(emb.tail(x));
      }
    }
  }
  std::sort(region.vertices.begin(), region.vertices.end());
  std::sort(region.edges.begin(), region.edges.end());
  return region;
}

}  // namespace ncsp
