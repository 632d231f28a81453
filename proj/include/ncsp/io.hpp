#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ncsp/embedding.hpp"

namespace ncsp {

struct WeightedEdge {
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
  long long weight = 1;
};

/// In-memory form of the instance text format:
///
///     n m
///     v deg u_1 ... u_deg        (n lines, neighbors ccw)
///     outer r w_1 ... w_r        (external face, clockwise)
///     coords                     (optional, followed by n lines `v x y`)
///     weights L                  (optional, followed by L lines `u v w`)
///
/// Blank lines and lines starting with '#' are ignored.
struct InstanceData {
  RawRotations rotations;
  std::vector<VertexId> outer;
  std::vector<Point> coords;
  std::vector<WeightedEdge> weights;
};

/// Throws Error(ParseError) with `source:line` context.
InstanceData parse_instance(std::istream& in, const std::string& source = "<input>");
InstanceData read_instance_file(const std::string& path);

/// With `cw_rotations`, every neighbor list is reversed before building.
PlanarEmbedding embedding_from(const InstanceData& data, bool cw_rotations = false);
InstanceData instance_data_of(const PlanarEmbedding& emb);

void write_instance(std::ostream& out, const InstanceData& data);
void write_instance_file(const std::string& path, const InstanceData& data);

struct TerminalPair {
  VertexId a = kNoVertex;
  VertexId b = kNoVertex;
};

/// Pairs file: line 1 `k`, then k lines `a b`.
std::vector<TerminalPair> parse_pairs(std::istream& in, const std::string& source = "<input>");
std::vector<TerminalPair> read_pairs_file(const std::string& path);
void write_pairs(std::ostream& out, const std::vector<TerminalPair>& pairs);
void write_pairs_file(const std::string& path, const std::vector<TerminalPair>& pairs);

}  // namespace ncsp
