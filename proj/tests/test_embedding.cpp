#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "ncsp/embedding.hpp"
#include "ncsp/io.hpp"

using namespace ncsp;
using namespace fixtures;

namespace {

ErrorKind build_error(const RawRotations& rot, const std::vector<VertexId>& outer) {
  try {
    build_embedding(rot, outer);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("build_embedding accepted a bad input");
  return ErrorKind::ParseError;
}

const DartPredicate all = [](DartId) { return true; };

}  // namespace

TEST_CASE("C4 has an inner and an outer face") {
  const auto emb = c4();
  CHECK(emb.num_vertices() == 4);
  CHECK(emb.num_edges() == 4);
  CHECK(emb.num_faces() == 2);
  CHECK(emb.outer_length() == 4);
  for (int j = 0; j < 4; ++j) {
    CHECK(emb.tail(emb.outer_darts()[j]) == j);
    CHECK(emb.head(emb.outer_darts()[j]) == (j + 1) % 4);
  }
}

TEST_CASE("G9 has five faces") {
  const auto emb = g9();
  CHECK(emb.num_vertices() == 9);
  CHECK(emb.num_edges() == 12);
  CHECK(emb.num_faces() == 5);
  CHECK(emb.outer_length() == 8);
  CHECK_FALSE(emb.on_outer_face(g9v::c));
}

TEST_CASE("dart ids pair up as reverses") {
  const auto emb = g9();
  for (DartId d = 0; d < emb.num_darts(); ++d) {
    CHECK(rev(rev(d)) == d);
    CHECK(emb.tail(rev(d)) == emb.head(d));
    CHECK(edge_of(d) == edge_of(rev(d)));
  }
}

TEST_CASE("bad inputs are rejected with the right kind") {
  // non-face outer sequence: the top two cells together
  const auto grid = generate_grid(3, 3);
  CHECK(build_error(grid.rotations, {0, 1, 2, 5, 4, 3}) == ErrorKind::OuterNotAFace);
  // outer repeats a vertex
  CHECK(build_error(grid.rotations, {0, 1, 2, 1}) == ErrorKind::OuterNotSimple);
  // asymmetric lists
  CHECK(build_error({{1, 2}, {2}, {0, 1}}, {0, 1, 2}) == ErrorKind::MalformedRotation);
  // self-loop
  CHECK(build_error({{0, 1, 2}, {2, 0}, {0, 1}}, {0, 1, 2}) == ErrorKind::MalformedRotation);
  // two disjoint triangles
  CHECK(build_error({{1, 2}, {2, 0}, {0, 1}, {4, 5}, {5, 3}, {3, 4}}, {0, 1, 2}) == ErrorKind::Disconnected);
  // K4 with a rotation system of genus one
  CHECK(build_error({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}, {0, 1, 2}) == ErrorKind::NotPlanar);
}

TEST_CASE("face_successor_left") {
  SUBCASE("C4 inner orbit closes after four steps") {
    const auto emb = c4();
    const DartId start = rev(emb.outer_darts()[0]);
    DartId d = start;
    for (int j = 0; j < 4; ++j) {
      d = emb.face_successor_left(d);
      if (j < 3) CHECK(d != start);
    }
    CHECK(d == start);
  }
  SUBCASE("G9 center, arriving from the west, continues north") {
    const auto emb = g9();
    CHECK(emb.face_successor_left(dart(emb, g9v::w, g9v::c)) == dart(emb, g9v::c, g9v::n));
  }
  SUBCASE("G9 cell orbits have length four and the outer one eight") {
    const auto emb = g9();
    std::multiset<std::size_t> sizes;
    for (FaceId f = 0; f < emb.num_faces(); ++f) sizes.insert(emb.face_darts(f).size());
    CHECK(sizes == std::multiset<std::size_t>{4, 4, 4, 4, 8});
    CHECK(emb.face_darts(emb.outer_face()).size() == 8);
  }
  SUBCASE("orbits partition the darts") {
    const auto emb = embedding_from(generate_disk(60, 3));
    std::vector<int> seen(emb.num_darts(), 0);
    for (FaceId f = 0; f < emb.num_faces(); ++f) {
      const auto darts = emb.face_darts(f);
      for (std::size_t j = 0; j < darts.size(); ++j) {
        ++seen[darts[j]];
        CHECK(emb.face_successor_left(darts[j]) == darts[(j + 1) % darts.size()]);
        CHECK(emb.face_of(darts[j]) == f);
      }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; }));
    CHECK(emb.num_vertices() - emb.num_edges() + emb.num_faces() == 2);
  }
}

TEST_CASE("turn_left at the G9 center") {
  const auto emb = g9();
  const DartId in = dart(emb, g9v::w, g9v::c);
  const DartId cn = dart(emb, g9v::c, g9v::n), ce = dart(emb, g9v::c, g9v::e), cw = dart(emb, g9v::c, g9v::w);
  CHECK(turn_left(emb, in, all) == cn);
  CHECK(turn_left(emb, in, [&](DartId d) { return d != cn; }) == ce);
  CHECK(turn_left(emb, in, [&](DartId d) { return d == cw; }) == cw);
  CHECK_FALSE(turn_left(emb, in, [](DartId) { return false; }).has_value());
}

TEST_CASE("turn_right at the G9 center") {
  const auto emb = g9();
  const DartId in = dart(emb, g9v::w, g9v::c);
  const DartId cs = dart(emb, g9v::c, g9v::s), ce = dart(emb, g9v::c, g9v::e), cw = dart(emb, g9v::c, g9v::w);
  CHECK(turn_right(emb, in, all) == cs);
  CHECK(turn_right(emb, in, [&](DartId d) { return d != cs; }) == ce);
  CHECK(turn_right(emb, in, [&](DartId d) { return d == cw; }) == cw);
}

TEST_CASE("left turns with full membership trace faces") {
  for (const auto& emb : {g9(), embedding_from(generate_disk(40, 11))}) {
    for (DartId d = 0; d < emb.num_darts(); ++d) {
      const DartId l = *turn_left(emb, d, all);
      CHECK(l == emb.face_successor_left(d));
      CHECK(*turn_right(emb, rev(l), all) == rev(d));
      // walking left returns to d after exactly the face length
      const auto face = emb.face_darts(emb.face_of(d));
      DartId x = d;
      for (std::size_t j = 0; j < face.size(); ++j) x = *turn_left(emb, x, all);
      CHECK(x == d);
    }
  }
}

TEST_CASE("region_of_cycle") {
  SUBCASE("C4 inner cycle is all of C4") {
    const auto emb = c4();
    std::vector<DartId> inner;
    for (int j = 3; j >= 0; --j) inner.push_back(rev(emb.outer_darts()[j]));
    const auto r = region_of_cycle(emb, inner);
    CHECK(r.vertices.size() == 4);
    CHECK(r.edges.size() == 4);
  }
  SUBCASE("G9 boundary from inside is the whole grid") {
    const auto emb = g9();
    std::vector<DartId> inner;
    for (int j = emb.outer_length() - 1; j >= 0; --j) inner.push_back(rev(emb.outer_darts()[j]));
    const auto r = region_of_cycle(emb, inner);
    CHECK(r.vertices.size() == 9);
    CHECK(r.edges.size() == 12);
  }
  SUBCASE("G9 cell is just that cell") {
    const auto emb = g9();
    // ccw around the top-left cell: interior on the left
    const std::vector<DartId> cell{dart(emb, 0, 3), dart(emb, 3, 4), dart(emb, 4, 1), dart(emb, 1, 0)};
    const auto r = region_of_cycle(emb, cell);
    CHECK(std::set<VertexId>(r.vertices.begin(), r.vertices.end()) == std::set<VertexId>{0, 1, 3, 4});
    CHECK(r.edges.size() == 4);
  }
  SUBCASE("the outer cycle taken clockwise encloses the external face") {
    const auto emb = g9();
    const std::vector<DartId> cw(emb.outer_darts().begin(), emb.outer_darts().end());
    CHECK_THROWS_AS(region_of_cycle(emb, cw), Error);
    try {
      region_of_cycle(emb, cw);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::EnclosesOuterFace);
    }
  }
  SUBCASE("an open walk is rejected") {
    const auto emb = g9();
    const std::vector<DartId> open{dart(emb, 0, 1), dart(emb, 1, 2)};
    try {
      region_of_cycle(emb, open);
      FAIL("accepted an open walk");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotAClosedWalk);
    }
  }
  SUBCASE("a 2x2 block of cells keeps the middle vertex") {
    const auto emb = embedding_from(generate_grid(4, 4));
    // ccw around vertices 0..10: 0 -> 4 -> 8 -> 9 -> 10 -> 6 -> 2 -> 1 -> 0
    const std::vector<VertexId> loop{0, 4, 8, 9, 10, 6, 2, 1, 0};
    std::vector<DartId> cyc;
    for (std::size_t j = 0; j + 1 < loop.size(); ++j) cyc.push_back(dart(emb, loop[j], loop[j + 1]));
    const auto r = region_of_cycle(emb, cyc);
    CHECK(r.vertices.size() == 9);
    CHECK(r.edges.size() == 12);
    CHECK(r.contains_vertex(5));
    CHECK_FALSE(r.contains_vertex(3));
  }
}

TEST_CASE("instance files round-trip") {
  const auto data = generate_disk(50, 5);
  std::ostringstream a;
  write_instance(a, data);
  std::istringstream in(a.str());
  const auto back = parse_instance(in);
  std::ostringstream b;
  write_instance(b, back);
  CHECK(a.str() == b.str());

  const auto emb = embedding_from(back);
  std::ostringstream c;
  write_instance(c, instance_data_of(emb));
  CHECK(c.str() == a.str());
}

TEST_CASE("parse errors carry a line number") {
  std::istringstream in("3 3\n0 2 1 2\n1 2 2 0\n2 two 0 1\nouter 3 0 1 2\n");
  try {
    parse_instance(in, "bad.txt");
    FAIL("accepted a malformed file");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("bad.txt:4") != std::string::npos);
  }
}

TEST_CASE("clockwise rotation lists are accepted behind the flag") {
  auto data = generate_grid(4, 3);
  for (auto& r : data.rotations) std::reverse(r.begin(), r.end());
  const auto emb = embedding_from(data, true);
  const auto ref = embedding_from(generate_grid(4, 3));
  CHECK(emb.raw_rotations() == ref.raw_rotations());
}
