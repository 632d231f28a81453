#pragma once

#include <iosfwd>
#include <vector>

#include "ncsp/io.hpp"

namespace ncsp {

struct Subdivision {
  InstanceData instance;  ///< unit weights, no weights section
  /// new_id[v] for every original vertex v. Original ids are kept, so this is
  /// the identity; fresh path vertices are numbered from the old n upwards.
  std::vector<VertexId> new_id;
};

/// Replaces every edge of weight w by a path of w unit edges through w-1 fresh
/// degree-two vertices. Edges without a weights line have weight 1.
/// Throws NonPositiveWeight, WeightCapExceeded (more than `cap` fresh vertices)
/// or ParamOutOfRange for a weight on a non-edge.
Subdivision subdivide_weights(const InstanceData& data, long long cap = 10'000'000);

/// `v new_id` lines.
void write_vertex_map(std::ostream& out, const Subdivision& sub);

}  // namespace ncsp
