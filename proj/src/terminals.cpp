#include "ncsp/terminals.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

namespace ncsp {

namespace {

void validate_pairs(const PlanarEmbedding& emb, std::span<const TerminalPair> pairs) {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    for (VertexId v : {pairs[j].a, pairs[j].b}) {
      if (v < 0 || v >= emb.num_vertices() || !emb.on_outer_face(v)) {
        std::ostringstream os;
        os << "pair " << j + 1 << ": vertex " << v << " is not on the external face";
        throw Error(ErrorKind::TerminalNotOnBoundary, os.str());
      }
    }
    if (pairs[j].a == pairs[j].b) {
      std::ostringstream os;
      os << "pair " << j + 1 << " joins vertex " << pairs[j].a << " to itself";
      throw Error(ErrorKind::DegeneratePair, os.str());
    }
    const auto key = std::minmax(pairs[j].a, pairs[j].b);
    if (!seen.insert(key).second) {
      std::ostringstream os;
      os << "pair " << j + 1 << " repeats {" << key.first << ", " << key.second << "}";
      throw Error(ErrorKind::DuplicatePair, os.str());
    }
  }
}

}  // namespace

WellFormedness check_well_formed(const PlanarEmbedding& emb, std::span<const TerminalPair> pairs) {
  validate_pairs(emb, pairs);
  const int r = emb.outer_length();
  const int k = static_cast<int>(pairs.size());
  std::vector<int> lo(k), hi(k);
  for (int j = 0; j < k; ++j) {
    const int pa = emb.outer_position(pairs[j].a);
    const int pb = emb.outer_position(pairs[j].b);
    lo[j] = std::min(pa, pb);
    hi[j] = std::max(pa, pb);
  }
  // Cut the cycle before position 0: each pair becomes an interval and the pairs
  // are well formed iff the intervals nest like parentheses.
  std::vector<std::vector<int>> opens(r);
  std::vector<int> closes(r, 0);
  for (int j = 0; j < k; ++j) {
    opens[lo[j]].push_back(j);
    ++closes[hi[j]];
  }
  std::vector<int> stack;
  WellFormedness result;
  for (int p = 0; p < r; ++p) {
    int popped = 0;
    while (!stack.empty() && hi[stack.back()] == p) {
      stack.pop_back();
      ++popped;
    }
    if (popped != closes[p]) {
      // Some interval ending here is buried under one that ends later.
      int buried = -1;
      for (int j : stack) {
        if (hi[j] == p) {
          buried = j;
          break;
        }
      }
      result.ok = false;
      result.violation = std::minmax(buried, stack.back());
      return result;
    }
    auto& here = opens[p];
    std::sort(here.begin(), here.end(), [&](int x, int y) { return hi[x] > hi[y]; });
    for (int j : here) stack.push_back(j);
  }
  return result;
}

bool NormalizedInstance::strictly_inside(int i, VertexId v) const noexcept {
  const int p = linear_pos[v];
  return p > linear_pos[pairs[i].s] && p < linear_pos[pairs[i].t];
}

NormalizedInstance normalize(const PlanarEmbedding& emb, std::span<const TerminalPair> pairs) {
  const auto wf = check_well_formed(emb, pairs);
  if (!wf.ok) {
    std::ostringstream os;
    os << "pairs " << wf.violation->first + 1 << " and " << wf.violation->second + 1 << " interleave";
    throw Error(ErrorKind::NotWellFormed, os.str());
  }
  const int r = emb.outer_length();
  const int k = static_cast<int>(pairs.size());

  // Pick the terminal-free arc that starts at the smallest boundary position.
  int start = 0;
  if (k > 0) {
    std::vector<int> prefix(r + 1, 0);
    for (const auto& p : pairs) {
      ++prefix[emb.outer_position(p.a) + 1];
      ++prefix[emb.outer_position(p.b) + 1];
    }
    std::partial_sum(prefix.begin(), prefix.end(), prefix.begin());
    const auto interior = [&](int from, int to) {
      if (from < to) return prefix[to] - prefix[from + 1];
      return (prefix[r] - prefix[from + 1]) + prefix[to];
    };
    std::tuple<int, int, int> best{r, r, k};
    for (int j = 0; j < k; ++j) {
      const int pa = emb.outer_position(pairs[j].a);
      const int pb = emb.outer_position(pairs[j].b);
      for (auto [from, to] : {std::pair{pa, pb}, std::pair{pb, pa}}) {
        if (interior(from, to) != 0) continue;
        const int length = ((to - from) % r + r) % r;
        best = std::min(best, std::tuple{from, length, j});
      }
    }
    if (std::get<2>(best) == k) {
      throw Error(ErrorKind::NotWellFormed, "no pair has a terminal-free boundary walk");
    }
    start = std::get<0>(best);
  }

  NormalizedInstance inst;
  inst.e_star = emb.outer_darts()[start];
  inst.linear_pos.assign(emb.num_vertices(), -1);
  for (int j = 0; j < r; ++j) {
    inst.linear_pos[emb.outer_vertices()[(start + 1 + j) % r]] = j;
  }
  inst.pairs.reserve(k);
  for (int j = 0; j < k; ++j) {
    OrientedPair op{pairs[j].a, pairs[j].b, j};
    if (inst.linear_pos[op.s] > inst.linear_pos[op.t]) std::swap(op.s, op.t);
    inst.pairs.push_back(op);
  }
  std::sort(inst.pairs.begin(), inst.pairs.end(), [&](const OrientedPair& x, const OrientedPair& y) {
    const int xs = inst.linear_pos[x.s], ys = inst.linear_pos[y.s];
    if (xs != ys) return xs < ys;
    const int xt = inst.linear_pos[x.t], yt = inst.linear_pos[y.t];
    if (xt != yt) return xt > yt;
    return x.input_index < y.input_index;
  });
  return inst;
}

std::string check_normalized(const PlanarEmbedding& emb, const NormalizedInstance& inst) {
  std::ostringstream os;
  const int k = inst.size();
  if (k == 0) return {};
  if (inst.e_star == kNoDart || emb.face_of(inst.e_star) != emb.outer_face()) return "e_star is not an outer dart";
  if (inst.pos(emb.head(inst.e_star)) != 0) return "linear positions do not start after e_star";
  for (int i = 0; i < k; ++i) {
    if (inst.pos(inst.pairs[i].s) >= inst.pos(inst.pairs[i].t)) {
      os << "walk of pair " << i + 1 << " uses e_star";
      return os.str();
    }
    if (i > 0 && inst.pos(inst.pairs[i].s) < inst.pos(inst.pairs[i - 1].s)) {
      os << "s_" << i + 1 << " precedes s_" << i << " clockwise";
      return os.str();
    }
    for (int j = 0; j < i; ++j) {
      for (VertexId v : {inst.pairs[j].s, inst.pairs[j].t}) {
        if (inst.strictly_inside(i, v)) {
          os << "terminal " << v << " of pair " << j + 1 << " lies inside the walk of pair " << i + 1;
          return os.str();
        }
      }
    }
  }
  for (const auto& p : inst.pairs) {
    for (VertexId v : {p.s, p.t}) {
      if (inst.pos(v) < inst.pos(inst.pairs[0].s) || inst.pos(v) > inst.pos(inst.pairs[0].t)) {
        os << "terminal " << v << " lies outside the walk of pair 1";
        return os.str();
      }
    }
  }
  return {};
}

std::vector<int> GenealogyTree::top_down_order() const {
  std::vector<int> order;
  if (parent.empty()) return order;
  order.push_back(0);
  for (std::size_t j = 0; j < order.size(); ++j) {
    for (int c : children[order[j]]) order.push_back(c);
  }
  return order;
}

GenealogyTree genealogy(const NormalizedInstance& inst) {
  const int k = inst.size();
  GenealogyTree tree;
  tree.parent.assign(k, -1);
  tree.children.assign(k, {});
  tree.enter.assign(k, 0);
  tree.leave.assign(k, 0);
  if (k == 0) return tree;

  const int r = static_cast<int>(std::count_if(inst.linear_pos.begin(), inst.linear_pos.end(),
                                               [](int p) { return p >= 0; }));
  std::vector<std::vector<int>> opens(r);
  std::vector<int> closes(r, 0);
  for (int i = 0; i < k; ++i) {
    opens[inst.pos(inst.pairs[i].s)].push_back(i);  // index order is outer-first
    ++closes[inst.pos(inst.pairs[i].t)];
  }
  std::vector<int> stack;
  for (int p = 0; p < r; ++p) {
    int popped = 0;
    while (!stack.empty() && inst.pos(inst.pairs[stack.back()].t) == p) {
      stack.pop_back();
      ++popped;
    }
    if (popped != closes[p]) {
      std::ostringstream os;
      os << "boundary position " << p << " closes a pair that is not innermost";
      throw Error(ErrorKind::ImbalancedScan, os.str());
    }
    for (int i : opens[p]) {
      if (stack.empty() != (i == 0)) {
        std::ostringstream os;
        os << "pair " << i + 1 << " is not nested in pair 1";
        throw Error(ErrorKind::ImbalancedScan, os.str());
      }
      if (!stack.empty()) {
        tree.parent[i] = stack.back();
        tree.children[stack.back()].push_back(i);
      }
      stack.push_back(i);
    }
  }
  if (!stack.empty()) throw Error(ErrorKind::ImbalancedScan, "pairs left open after the scan");

  int clock = 0;
  std::vector<std::pair<int, std::size_t>> dfs{{0, 0}};
  tree.enter[0] = clock++;
  while (!dfs.empty()) {
    auto& [node, next] = dfs.back();
    if (next < tree.children[node].size()) {
      const int c = tree.children[node][next++];
      tree.enter[c] = clock++;
      dfs.emplace_back(c, 0);
    } else {
      tree.leave[node] = clock++;
      dfs.pop_back();
    }
  }
  return tree;
}

void dump_genealogy(std::ostream& out, const GenealogyTree& tree) {
  for (int i = 0; i < tree.size(); ++i) out << i + 1 << ' ' << tree.parent[i] + 1 << '\n';
}

}  // namespace ncsp
