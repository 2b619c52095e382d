#include <algorithm>

#include "bikei/diagram.hpp"
#include "bikei/fixtures.hpp"
#include "doctest.h"

using namespace bikei;

TEST_CASE("parse_diagram") {
  const auto d = parse_diagram("# hopf\nX 1 2 3 4\nX 2 1 4 3\n");
  CHECK(d.crossing_count() == 2);
  CHECK(d.free_loops() == 0);
  CHECK(d.semiarcs() == std::vector<SemiarcId>{1, 2, 3, 4});
  CHECK(d == *fixtures::diagram("hopf"));

  const auto u = parse_diagram("O 1");
  CHECK(u.crossing_count() == 0);
  CHECK(u.free_loops() == 1);
  CHECK(u.strands() == std::vector<StrandId>{StrandId::loop(1)});

  const auto t = *fixtures::diagram("trefoil");
  CHECK(t.crossing_count() == 3);
  CHECK(t.semiarcs().size() == 6);
}

TEST_CASE("parse_diagram rejects malformed input") {
  CHECK_THROWS_AS(parse_diagram("X 1 2 3 4\nX 1 2 3 5\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("X 1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("X 1 1 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("Y 1 2 3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("O 1\nO 2\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("X a b c d\n"), ParseError);
  CHECK_THROWS_AS(LinkDiagram({Crossing{{1, 1, 1, 2}}}, 0), DiagramError);
}

TEST_CASE("strand symbols") {
  CHECK(StrandId::semiarc(12).symbol() == "s12");
  CHECK(StrandId::loop(2).symbol() == "f2");
  CHECK(StrandId::from_symbol("s7") == StrandId::semiarc(7));
  CHECK(StrandId::from_symbol("f1") == StrandId::loop(1));
  CHECK_THROWS_AS(StrandId::from_symbol("x1"), ParseError);
  CHECK_THROWS_AS(StrandId::from_symbol("s0"), ParseError);
  CHECK(StrandId::semiarc(100) < StrandId::loop(1));
}

TEST_CASE("crossing rotation and reflection") {
  const Crossing c{{1, 2, 3, 4}};
  CHECK(c.rotated(1) == Crossing{{2, 3, 4, 1}});
  CHECK(c.rotated(4) == c);
  CHECK(c.reflected() == Crossing{{1, 4, 3, 2}});
  CHECK(equivalent(c, c.rotated(2)));
  CHECK_FALSE(equivalent(c, c.rotated(1)));

  const auto h = *fixtures::diagram("hopf");
  const LinkDiagram r({h.crossings()[0].rotated(2), h.crossings()[1]}, 0);
  CHECK(h.same_as(r));
  CHECK_FALSE(h == r);
}

TEST_CASE("occurrences") {
  const auto h = *fixtures::diagram("hopf");
  for (SemiarcId s : h.semiarcs()) {
    const auto occ = h.occurrences(s);
    CHECK(h.at(occ[0]) == s);
    CHECK(h.at(occ[1]) == s);
    CHECK(occ[0] < occ[1]);
  }
  CHECK_THROWS_AS(h.occurrences(9), DiagramError);
}

TEST_CASE("components") {
  const auto hopf = components(*fixtures::diagram("hopf"));
  REQUIRE(hopf.size() == 2);
  CHECK(hopf[0].semiarcs.size() == 2);
  CHECK(hopf[1].semiarcs.size() == 2);

  const auto tref = components(*fixtures::diagram("trefoil"));
  REQUIRE(tref.size() == 1);
  auto arcs = tref[0].semiarcs;
  std::sort(arcs.begin(), arcs.end());
  CHECK(arcs == std::vector<SemiarcId>{1, 2, 3, 4, 5, 6});

  const auto un = components(*fixtures::diagram("unlink2"));
  REQUIRE(un.size() == 2);
  CHECK(un[0].free_loop == 1);
  CHECK(un[1].free_loop == 2);
  CHECK(un[0].semiarcs.empty());
}

TEST_CASE("serialize_diagram round-trips") {
  for (const auto& name : fixtures::diagram_names()) {
    const auto d = *fixtures::diagram(name);
    CHECK(parse_diagram(serialize_diagram(d)) == d);
  }
}
