#pragma once

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "ncsp/embedding.hpp"
#include "ncsp/generate.hpp"
#include "ncsp/io.hpp"
#include "ncsp/rng.hpp"

namespace fixtures {

using namespace ncsp;

// 4-cycle a=0, b=1, c=2, d=3 with outer face (a, b, c, d) clockwise.
inline PlanarEmbedding c4() {
  const RawRotations rot{{1, 3}, {2, 0}, {3, 1}, {0, 2}};
  const std::vector<VertexId> outer{0, 1, 2, 3};
  return build_embedding(rot, outer);
}

// 3x3 grid, ids r*3+c with row 0 on top. Rotations list E, N, W, S.
inline PlanarEmbedding g9() { return embedding_from(generate_grid(3, 3)); }

namespace g9v {
inline constexpr VertexId nw = 0, n = 1, ne = 2, w = 3, c = 4, e = 5, sw = 6, s = 7, se = 8;
}

inline DartId dart(const PlanarEmbedding& emb, VertexId u, VertexId v) {
  const DartId d = emb.find_dart(u, v);
  if (d == kNoDart) throw std::logic_error("fixture: no such edge");
  return d;
}

// Fourteen terminals on the boundary of a 6x6 grid in the clockwise order
//   t1 | e* | s1 s2 s3 t3 s4 s5 t5 t4 t2 s6 s7 t7 t6
// with t1 at outer position 0, so the free arc t1 -> s1 starts first.
struct SevenPairs {
  PlanarEmbedding emb;
  std::array<VertexId, 8> s{};  // 1-based labels
  std::array<VertexId, 8> t{};
  std::vector<TerminalPair> labelled;  // pair j-1 is (s_j, t_j)
};

inline SevenPairs seven_pairs() {
  SevenPairs f;
  f.emb = embedding_from(generate_grid(6, 6));
  const auto at = [&](int pos) { return f.emb.outer_vertices()[pos]; };
  const std::array<int, 8> s_pos{-1, 2, 3, 4, 6, 7, 12, 13};
  const std::array<int, 8> t_pos{-1, 0, 10, 5, 9, 8, 15, 14};
  for (int j = 1; j <= 7; ++j) {
    f.s[j] = at(s_pos[j]);
    f.t[j] = at(t_pos[j]);
    f.labelled.push_back({f.s[j], f.t[j]});
  }
  return f;
}

// The seven pairs in a scrambled order and with random orientations.
inline std::vector<TerminalPair> scrambled(std::vector<TerminalPair> pairs, std::uint64_t seed) {
  Rng rng(seed);
  for (auto& p : pairs) {
    if (rng.coin()) std::swap(p.a, p.b);
  }
  rng.shuffle(pairs);
  return pairs;
}

}  // namespace fixtures
