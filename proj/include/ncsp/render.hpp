#pragma once

#include <iosfwd>
#include <vector>

#include "ncsp/embedding.hpp"
#include "ncsp/pathunion.hpp"
#include "ncsp/supergraph.hpp"
#include "ncsp/terminals.hpp"

namespace ncsp {

/// SVG drawing of a solved instance: all edges in light grey, X_k edges in a
/// darker grey, the external boundary in black, each path in its own colour and
/// the terminals labelled with their pair index. Throws ParamOutOfRange when the
/// embedding carries no coordinates.
void render_svg(std::ostream& out, const PlanarEmbedding& emb, const NormalizedInstance& inst,
                const SupergraphTimeline* timeline, const std::vector<std::vector<DartId>>& paths);

}  // namespace ncsp
