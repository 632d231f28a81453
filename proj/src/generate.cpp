#include "ncsp/generate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace ncsp {

namespace {

[[noreturn]] void out_of_range(const std::string& what) { throw Error(ErrorKind::ParamOutOfRange, what); }

void insert_after(std::vector<VertexId>& list, VertexId anchor, VertexId x) {
  const auto it = std::find(list.begin(), list.end(), anchor);
  list.insert(it + 1, x);
}

void insert_before(std::vector<VertexId>& list, VertexId anchor, VertexId x) {
  const auto it = std::find(list.begin(), list.end(), anchor);
  list.insert(it, x);
}

}  // namespace

InstanceData generate_grid(int width, int height, int max_weight, std::uint64_t seed) {
  if (width < 2 || height < 2) out_of_range("grid sides must be at least 2");
  if (max_weight < 1) out_of_range("max weight must be at least 1");
  if (static_cast<long long>(width) * height > 50'000'000) out_of_range("grid too large");
  InstanceData data;
  const int n = width * height;
  const auto id = [width](int r, int c) { return r * width + c; };
  data.rotations.resize(n);
  data.coords.resize(n);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      auto& rot = data.rotations[id(r, c)];
      if (c + 1 < width) rot.push_back(id(r, c + 1));
      if (r > 0) rot.push_back(id(r - 1, c));
      if (c > 0) rot.push_back(id(r, c - 1));
      if (r + 1 < height) rot.push_back(id(r + 1, c));
      data.coords[id(r, c)] = {static_cast<double>(c), static_cast<double>(height - 1 - r)};
    }
  }
  for (int c = 0; c < width; ++c) data.outer.push_back(id(0, c));
  for (int r = 1; r < height; ++r) data.outer.push_back(id(r, width - 1));
  for (int c = width - 2; c >= 0; --c) data.outer.push_back(id(height - 1, c));
  for (int r = height - 2; r > 0; --r) data.outer.push_back(id(r, 0));

  if (max_weight > 1) {
    Rng rng(seed);
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v : data.rotations[u]) {
        if (v > u) data.weights.push_back({u, v, rng.between(1, max_weight)});
      }
    }
  }
  return data;
}

InstanceData generate_disk(int n, std::uint64_t seed, double interior_fraction) {
  if (n < 3) out_of_range("disk needs at least 3 vertices");
  if (!(interior_fraction >= 0.0 && interior_fraction < 1.0)) out_of_range("interior fraction must be in [0, 1)");
  const int interior = static_cast<int>(std::lround(interior_fraction * n));
  const int boundary = n - interior;
  if (boundary < 3) out_of_range("fewer than 3 boundary vertices");

  Rng rng(seed);
  InstanceData data;
  auto& rot = data.rotations;
  rot.resize(n);
  std::vector<VertexId> next(n, kNoVertex);  // clockwise successor on the boundary
  std::vector<VertexId> on_boundary{0, 1, 2};
  std::vector<std::array<VertexId, 3>> triangles{{0, 2, 1}};  // inner faces, ccw
  rot[0] = {1, 2};
  rot[1] = {2, 0};
  rot[2] = {0, 1};
  next[0] = 1;
  next[1] = 2;
  next[2] = 0;

  for (VertexId w = 3; w < boundary; ++w) {
    const VertexId u = on_boundary[rng.below(on_boundary.size())];
    const VertexId v = next[u];
    insert_after(rot[u], v, w);
    insert_before(rot[v], u, w);
    rot[w] = {v, u};
    next[u] = w;
    next[w] = v;
    on_boundary.push_back(w);
    triangles.push_back({u, v, w});
  }

  data.coords.resize(n);
  VertexId at = 0;
  for (int j = 0; j < boundary; ++j) {
    data.outer.push_back(at);
    const double theta = std::numbers::pi / 2 - 2 * std::numbers::pi * j / boundary;
    data.coords[at] = {std::cos(theta), std::sin(theta)};
    at = next[at];
  }

  for (VertexId x = boundary; x < n; ++x) {
    const std::size_t t = rng.below(triangles.size());
    const auto [a, b, c] = triangles[t];
    insert_after(rot[a], b, x);
    insert_after(rot[b], c, x);
    insert_after(rot[c], a, x);
    rot[x] = {a, b, c};
    triangles[t] = {a, b, x};
    triangles.push_back({b, c, x});
    triangles.push_back({c, a, x});
    data.coords[x] = {(data.coords[a].x + data.coords[b].x + data.coords[c].x) / 3,
                      (data.coords[a].y + data.coords[b].y + data.coords[c].y) / 3};
  }
  return data;
}

namespace {

// A random word of k '(' and k ')' that never closes more than it opened.
std::vector<bool> random_dyck_word(int k, Rng& rng) {
  std::vector<bool> word;
  int open = 0, opened = 0;
  for (int j = 0; j < 2 * k; ++j) {
    const bool can_open = opened < k;
    const bool can_close = open > 0;
    const bool opening = can_open && (!can_close || rng.coin());
    word.push_back(opening);
    open += opening ? 1 : -1;
    opened += opening ? 1 : 0;
  }
  return word;
}

}  // namespace

std::vector<TerminalPair> random_pairs(const PlanarEmbedding& emb, int k, Rng& rng, double share) {
  const int r = emb.outer_length();
  if (k < 0 || (share <= 0.0 && 2 * k > r) || k > r * (r - 1) / 2) {
    std::ostringstream os;
    os << k << " pairs do not fit on a boundary of length " << r;
    out_of_range(os.str());
  }
  if (!(share >= 0.0 && share < 1.0)) out_of_range("share probability must be in [0, 1)");

  for (int attempt = 0;; ++attempt) {
    const double p = attempt < 100 ? share : 0.0;
    const auto word = random_dyck_word(k, rng);
    // slot -> index of its distinct boundary vertex
    std::vector<int> group(word.size());
    int groups = 0;
    for (std::size_t j = 0; j < word.size(); ++j) {
      const bool joinable = j > 0 && !(word[j - 1] && !word[j]);
      const bool join = joinable && p > 0.0 && static_cast<double>(rng.below(1 << 20)) < p * (1 << 20);
      group[j] = join ? groups - 1 : groups++;
    }
    if (groups > r) {
      if (p == 0.0) out_of_range("boundary too short");
      continue;
    }
    std::vector<int> positions(r);
    for (int j = 0; j < r; ++j) positions[j] = j;
    for (int j = 0; j < groups; ++j) std::swap(positions[j], positions[j + rng.below(r - j)]);
    positions.resize(groups);
    std::sort(positions.begin(), positions.end());

    std::vector<TerminalPair> pairs;
    std::vector<int> open;
    for (std::size_t j = 0; j < word.size(); ++j) {
      if (word[j]) {
        open.push_back(static_cast<int>(j));
        continue;
      }
      const VertexId a = emb.outer_vertices()[positions[group[open.back()]]];
      const VertexId b = emb.outer_vertices()[positions[group[j]]];
      open.pop_back();
      pairs.push_back(rng.coin() ? TerminalPair{a, b} : TerminalPair{b, a});
    }
    std::vector<std::pair<VertexId, VertexId>> keys;
    for (const auto& q : pairs) keys.push_back(std::minmax(q.a, q.b));
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) continue;
    rng.shuffle(pairs);
    return pairs;
  }
}

}  // namespace ncsp
