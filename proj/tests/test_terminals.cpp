#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <sstream>

#include "fixtures.hpp"
#include "ncsp/generate.hpp"
#include "ncsp/terminals.hpp"

using namespace ncsp;
using namespace fixtures;

namespace {

ErrorKind normalize_error(const PlanarEmbedding& emb, std::vector<TerminalPair> pairs) {
  try {
    normalize(emb, pairs);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("normalize accepted bad pairs");
  return ErrorKind::ParseError;
}

// Independent nesting test: gamma_i is the set of clockwise outer darts from s_i to t_i.
std::vector<std::vector<bool>> gammas(const PlanarEmbedding& emb, const NormalizedInstance& inst) {
  const int r = emb.outer_length();
  std::vector<std::vector<bool>> g;
  for (const auto& p : inst.pairs) {
    std::vector<bool> in(r, false);
    for (int j = emb.outer_position(p.s); j != emb.outer_position(p.t); j = (j + 1) % r) in[j] = true;
    g.push_back(in);
  }
  return g;
}

bool subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] && !b[j]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parenthesis scan on a 12-cycle") {
  const auto emb = embedding_from(generate_grid(4, 4));
  const auto at = [&](int j) { return emb.outer_vertices()[j]; };
  SUBCASE("s1 s2 t2 t1 is nested") {
    const std::vector<TerminalPair> p{{at(0), at(5)}, {at(1), at(3)}};
    CHECK(check_well_formed(emb, p).ok);
  }
  SUBCASE("s1 s2 t1 t2 interleaves") {
    const std::vector<TerminalPair> p{{at(0), at(3)}, {at(1), at(5)}};
    const auto w = check_well_formed(emb, p);
    CHECK_FALSE(w.ok);
    REQUIRE(w.violation.has_value());
    CHECK(*w.violation == std::pair{0, 1});
    CHECK(normalize_error(emb, p) == ErrorKind::NotWellFormed);
  }
  SUBCASE("bad terminals") {
    CHECK(normalize_error(emb, {{5, at(0)}}) == ErrorKind::TerminalNotOnBoundary);
    CHECK(normalize_error(emb, {{at(2), at(2)}}) == ErrorKind::DegeneratePair);
    CHECK(normalize_error(emb, {{at(2), at(4)}, {at(4), at(2)}}) == ErrorKind::DuplicatePair);
  }
  SUBCASE("shared terminals are allowed") {
    const std::vector<TerminalPair> p{{at(0), at(6)}, {at(0), at(3)}, {at(3), at(6)}};
    CHECK(check_well_formed(emb, p).ok);
    const auto inst = normalize(emb, p);
    CHECK(check_normalized(emb, inst).empty());
  }
}

TEST_CASE("seven nested pairs: labels and genealogy") {
  const auto f = seven_pairs();
  CHECK(check_well_formed(f.emb, f.labelled).ok);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto input = scrambled(f.labelled, seed);
    const auto inst = normalize(f.emb, input);
    REQUIRE(inst.size() == 7);
    CHECK(f.emb.tail(inst.e_star) == f.t[1]);
    for (int j = 1; j <= 7; ++j) {
      CHECK(inst.pairs[j - 1].s == f.s[j]);
      CHECK(inst.pairs[j - 1].t == f.t[j]);
    }
    const auto tree = genealogy(inst);
    const std::map<int, int> expect{{2, 1}, {6, 1}, {3, 2}, {4, 2}, {5, 4}, {7, 6}};
    CHECK(tree.parent[0] == -1);
    for (const auto& [child, parent] : expect) CHECK(tree.parent[child - 1] == parent - 1);

    std::ostringstream os;
    dump_genealogy(os, tree);
    CHECK(os.str() == "1 0\n2 1\n3 2\n4 2\n5 4\n6 1\n7 6\n");
  }
}

TEST_CASE("single pair avoids e_star") {
  const auto emb = g9();
  for (VertexId a : {0, 2, 5, 6}) {
    for (VertexId b : {1, 8, 3}) {
      if (a == b) continue;
      const std::vector<TerminalPair> p{{a, b}};
      const auto inst = normalize(emb, p);
      REQUIRE(inst.size() == 1);
      const auto g = gammas(emb, inst);
      CHECK_FALSE(g[0][emb.outer_position(emb.tail(inst.e_star))]);
      CHECK(check_normalized(emb, inst).empty());
    }
  }
}

TEST_CASE("nested pairs come out outer first") {
  const auto emb = embedding_from(generate_grid(4, 4));
  const auto at = [&](int j) { return emb.outer_vertices()[j]; };
  // inner pair given first; a third pair owns the first free arc
  const std::vector<TerminalPair> p{{at(4), at(5)}, {at(3), at(7)}, {at(0), at(1)}};
  const auto inst = normalize(emb, p);
  REQUIRE(inst.size() == 3);
  CHECK(inst.pairs[1].input_index == 1);
  CHECK(inst.pairs[2].input_index == 0);
}

TEST_CASE("genealogy shapes") {
  const auto emb = embedding_from(generate_grid(6, 6));
  const auto at = [&](int j) { return emb.outer_vertices()[j]; };
  SUBCASE("k = 1") {
    const std::vector<TerminalPair> p{{at(3), at(11)}};
    const auto tree = genealogy(normalize(emb, p));
    CHECK(tree.parent == std::vector<int>{-1});
  }
  SUBCASE("a chain of nested pairs is a path") {
    std::vector<TerminalPair> p;
    for (int j = 0; j < 6; ++j) p.push_back({at(2 + j), at(19 - j)});
    const auto inst = normalize(emb, p);
    const auto tree = genealogy(inst);
    for (int j = 1; j < 6; ++j) CHECK(tree.parent[j] == j - 1);
  }
  SUBCASE("k = 0") {
    const auto inst = normalize(emb, std::vector<TerminalPair>{});
    CHECK(inst.size() == 0);
    CHECK(genealogy(inst).size() == 0);
  }
}

TEST_CASE("random pairs: invariants against direct scans") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const auto emb = seed % 3 ? embedding_from(generate_disk(40 + seed % 50, seed)) : embedding_from(generate_grid(7, 6));
    Rng rng(seed);
    const int k = 1 + static_cast<int>(rng.below(std::min(12, emb.outer_length() / 2)));
    const auto pairs = random_pairs(emb, k, rng, seed % 4 == 0 ? 0.4 : 0.0);
    REQUIRE(check_well_formed(emb, pairs).ok);
    const auto inst = normalize(emb, pairs);
    CHECK(check_normalized(emb, inst).empty());
    const auto g = gammas(emb, inst);
    const auto tree = genealogy(inst);
    const int e_pos = emb.outer_position(emb.tail(inst.e_star));
    for (int i = 0; i < k; ++i) {
      CHECK_FALSE(g[i][e_pos]);
      // earlier terminals never sit strictly inside gamma_i
      for (int j = 0; j < i; ++j) {
        CHECK_FALSE(inst.strictly_inside(i, inst.pairs[j].s));
        CHECK_FALSE(inst.strictly_inside(i, inst.pairs[j].t));
      }
      if (i == 0) continue;
      // parent = minimal strict superset
      const int p = tree.parent[i];
      REQUIRE(p >= 0);
      CHECK(subset(g[i], g[p]));
      CHECK(g[i] != g[p]);
      for (int l = 0; l < k; ++l) {
        if (l == i || l == p) continue;
        const bool between = subset(g[i], g[l]) && g[i] != g[l] && subset(g[l], g[p]) && g[l] != g[p];
        CHECK_FALSE(between);
      }
    }
    // idempotent on its own output
    std::vector<TerminalPair> again;
    for (const auto& q : inst.pairs) again.push_back({q.s, q.t});
    const auto inst2 = normalize(emb, again);
    CHECK(inst2.e_star == inst.e_star);
    for (int i = 0; i < k; ++i) {
      CHECK(inst2.pairs[i].s == inst.pairs[i].s);
      CHECK(inst2.pairs[i].t == inst.pairs[i].t);
      CHECK(inst2.pairs[i].input_index == i);
    }
  }
}
