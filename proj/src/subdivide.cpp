#include "ncsp/subdivide.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace ncsp {

Subdivision subdivide_weights(const InstanceData& data, long long cap) {
  const int n = static_cast<int>(data.rotations.size());
  std::map<std::pair<VertexId, VertexId>, long long> weight;
  long long fresh = 0;
  for (const auto& e : data.weights) {
    std::ostringstream os;
    os << "edge " << e.u << "-" << e.v;
    if (e.weight <= 0) throw Error(ErrorKind::NonPositiveWeight, os.str() + " has weight " + std::to_string(e.weight));
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n ||
        std::find(data.rotations[e.u].begin(), data.rotations[e.u].end(), e.v) == data.rotations[e.u].end()) {
      throw Error(ErrorKind::ParamOutOfRange, os.str() + " is not in the graph");
    }
    if (!weight.emplace(std::minmax(e.u, e.v), e.weight).second) {
      throw Error(ErrorKind::ParamOutOfRange, os.str() + " is weighted twice");
    }
    fresh += e.weight - 1;
    if (fresh > cap) {
      throw Error(ErrorKind::WeightCapExceeded,
                  "subdivision needs more than " + std::to_string(cap) + " new vertices");
    }
  }

  Subdivision sub;
  InstanceData& out = sub.instance;
  out.rotations = data.rotations;
  out.coords = data.coords;
  out.rotations.reserve(n + fresh);
  sub.new_id.resize(n);
  for (VertexId v = 0; v < n; ++v) sub.new_id[v] = v;

  // Chain of fresh vertices per subdivided edge, listed from the smaller endpoint.
  std::map<std::pair<VertexId, VertexId>, std::vector<VertexId>> chain;
  for (const auto& [key, w] : weight) {
    if (w == 1) continue;
    const auto [u, v] = key;
    auto& path = chain[key];
    for (long long j = 1; j < w; ++j) {
      const auto x = static_cast<VertexId>(out.rotations.size());
      path.push_back(x);
      out.rotations.emplace_back();
      if (!out.coords.empty()) {
        const double f = static_cast<double>(j) / static_cast<double>(w);
        out.coords.push_back({data.coords[u].x + f * (data.coords[v].x - data.coords[u].x),
                              data.coords[u].y + f * (data.coords[v].y - data.coords[u].y)});
      }
    }
    *std::find(out.rotations[u].begin(), out.rotations[u].end(), v) = path.front();
    *std::find(out.rotations[v].begin(), out.rotations[v].end(), u) = path.back();
    for (std::size_t j = 0; j < path.size(); ++j) {
      const VertexId prev = j == 0 ? u : path[j - 1];
      const VertexId next = j + 1 == path.size() ? v : path[j + 1];
      out.rotations[path[j]] = {prev, next};
    }
  }

  const std::size_t r = data.outer.size();
  for (std::size_t j = 0; j < r; ++j) {
    const VertexId a = data.outer[j];
    const VertexId b = data.outer[(j + 1) % r];
    out.outer.push_back(a);
    const auto it = chain.find(std::minmax(a, b));
    if (it == chain.end()) continue;
    if (a < b) {
      out.outer.insert(out.outer.end(), it->second.begin(), it->second.end());
    } else {
      out.outer.insert(out.outer.end(), it->second.rbegin(), it->second.rend());
    }
  }
  return sub;
}

void write_vertex_map(std::ostream& out, const Subdivision& sub) {
  for (std::size_t v = 0; v < sub.new_id.size(); ++v) out << v << ' ' << sub.new_id[v] << '\n';
}

}  // namespace ncsp
