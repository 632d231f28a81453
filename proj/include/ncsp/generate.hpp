#pragma once

#include <cstdint>
#include <vector>

#include "ncsp/embedding.hpp"
#include "ncsp/io.hpp"
#include "ncsp/rng.hpp"

namespace ncsp {

/// W x H grid. Vertex (r, c) has id r*W + c, row 0 on top; coordinates put
/// row 0 at the largest y. With max_weight > 1 every edge gets a uniform random
/// weight in [1, max_weight] (drawn from `seed`). Throws ParamOutOfRange.
InstanceData generate_grid(int width, int height, int max_weight = 1, std::uint64_t seed = 0);

/// Random triangulated disk on n vertices: a polygon grown by uniform ear
/// insertion, then round(interior_fraction * n) vertices dropped into uniformly
/// chosen inner triangles. Boundary vertices sit on a circle and interior ones
/// at the centroid of the triangle they split. Throws ParamOutOfRange.
InstanceData generate_disk(int n, std::uint64_t seed, double interior_fraction = 0.5);

/// k well-formed pairs matched by a random balanced parenthesis word laid out
/// clockwise on the boundary. Each symbol shares the previous symbol's vertex
/// with probability `share` (never an opening symbol with its own closing one),
/// so pairs may have common terminals. Throws ParamOutOfRange when the
/// boundary is too short.
std::vector<TerminalPair> random_pairs(const PlanarEmbedding& emb, int k, Rng& rng, double share = 0.0);

}  // namespace ncsp
