#include <set>

#include "bikei/automorphism.hpp"
#include "bikei/fixtures.hpp"
#include "bikei/moves.hpp"
#include "doctest.h"

using namespace bikei;

namespace {

const MoveKind all_kinds[] = {MoveKind::r1_add, MoveKind::r1_remove, MoveKind::r2_add,
                              MoveKind::r2_remove, MoveKind::r3};

LinkDiagram triangle() { return parse_diagram("X 2 4 6 1\nX 3 1 6 5\nX 3 5 4 2\n"); }

LinkDiagram kink() { return apply_move(*fixtures::diagram("unknot"), R1Add{StrandId::loop(1), 'A', false}).first; }

// Diagrams reached from the fixtures by one or two moves, for broader coverage.
std::vector<LinkDiagram> corpus() {
  std::vector<LinkDiagram> out;
  for (const auto& name : fixtures::diagram_names()) out.push_back(*fixtures::diagram(name));
  out.push_back(triangle());
  const auto base = out;
  for (const auto& d : base)
    for (MoveKind k : {MoveKind::r1_add, MoveKind::r2_add}) {
      const auto sites = find_move_sites(d, k);
      if (!sites.empty()) out.push_back(apply_move(d, sites[sites.size() / 2]).first);
    }
  return out;
}

bool restores(const MoveRecord& rec) {
  const auto [back, undo] = apply_move(rec.after, rec.inverse);
  const auto through = compose_surviving(rec.surviving, undo.surviving);
  std::map<StrandId, int> hits;
  for (const auto& [x, y] : through) ++hits[y];
  std::map<StrandId, StrandId> seed;
  for (const auto& [x, y] : through)
    if (hits[y] == 1) seed[x] = y;
  return find_isomorphism(rec.before, back, seed).has_value();
}

}  // namespace

TEST_CASE("R1+ on the unknot and back") {
  const auto [k, rec] = apply_move(*fixtures::diagram("unknot"), R1Add{StrandId::loop(1), 'A', false});
  REQUIRE(k.crossing_count() == 1);
  CHECK(k.crossings()[0] == Crossing{{1, 1, 2, 2}});
  CHECK(k.free_loops() == 0);
  CHECK(k.semiarcs().size() == 2);
  CHECK(rec.surviving.at(StrandId::loop(1)) == StrandId::semiarc(1));
  CHECK(rec.created == std::vector<StrandId>{StrandId::semiarc(2)});

  const auto [u, back] = apply_move(k, R1Remove{0, 1});
  CHECK(u.crossing_count() == 0);
  CHECK(u.free_loops() == 1);
  CHECK(back.destroyed == std::vector<StrandId>{StrandId::semiarc(1)});
  CHECK(back.surviving.at(StrandId::semiarc(2)) == StrandId::loop(1));

  const auto vb = apply_move(*fixtures::diagram("unknot"), R1Add{StrandId::loop(1), 'B', false});
  CHECK(vb.first.crossings()[0] == Crossing{{1, 2, 2, 1}});
}

TEST_CASE("R2+ on the Hopf link") {
  const auto [d, rec] = apply_move(*fixtures::diagram("hopf"), R2Add{1, 3, true, false, false});
  CHECK(d.crossing_count() == 4);
  CHECK(d.semiarcs().size() == 8);
  CHECK(rec.created.size() == 4);
  CHECK(components(d).size() == 2);
  CHECK(kind_of(rec.inverse) == MoveKind::r2_remove);
}

TEST_CASE("move patterns are enforced") {
  const auto hopf = *fixtures::diagram("hopf");
  CHECK_THROWS_AS(apply_move(hopf, R1Remove{0, 1}), MoveError);
  CHECK_THROWS_AS(apply_move(hopf, R2Remove{0, 1}), MoveError);
  CHECK_THROWS_AS(apply_move(hopf, R1Add{StrandId::semiarc(9), 'A', false}), MoveError);
  CHECK_THROWS_AS(apply_move(hopf, R1Add{StrandId::loop(1), 'A', false}), MoveError);
  CHECK_THROWS_AS(apply_move(hopf, R2Add{1, 1, true, false, false}), MoveError);
  CHECK_THROWS_AS(apply_move(*fixtures::diagram("trefoil"), R3Move{0, 1, 2}), MoveError);
  CHECK_THROWS_AS(apply_move(hopf, R1Remove{5, 1}), MoveError);
}

TEST_CASE("site enumeration") {
  CHECK(find_move_sites(kink(), MoveKind::r1_remove).size() == 2);
  CHECK(find_move_sites(*fixtures::diagram("unknot"), MoveKind::r1_remove).empty());
  CHECK(find_move_sites(*fixtures::diagram("unknot"), MoveKind::r1_add).size() == 2);
  // Six semiarcs, two variants, two sides.
  CHECK(find_move_sites(*fixtures::diagram("trefoil"), MoveKind::r1_add).size() == 24);
  CHECK(find_move_sites(*fixtures::diagram("trefoil"), MoveKind::r3).empty());
  CHECK(find_move_sites(triangle(), MoveKind::r3).size() == 1);
  CHECK(find_move_sites(*fixtures::diagram("hopf"), MoveKind::none).size() == 1);
}

TEST_CASE("every site applies and its inverse restores the diagram") {
  int checked = 0;
  for (const auto& d : corpus())
    for (MoveKind k : all_kinds)
      for (const auto& spec : find_move_sites(d, k)) {
        CAPTURE(serialize_diagram(d));
        CAPTURE(format_move(spec));
        const auto [after, rec] = apply_move(d, spec);
        CHECK(rec.before == d);
        CHECK(rec.after == after);
        CHECK(components(after).size() == components(d).size());
        CHECK(after.semiarcs().size() == 2 * static_cast<std::size_t>(after.crossing_count()));

        const int dc = after.crossing_count() - d.crossing_count();
        switch (k) {
          case MoveKind::r1_add: CHECK(dc == 1); break;
          case MoveKind::r1_remove: CHECK(dc == -1); break;
          case MoveKind::r2_add: CHECK(dc == 2); break;
          case MoveKind::r2_remove: CHECK(dc == -2); break;
          default: CHECK(dc == 0);
        }

        // Surviving, created and destroyed account for every strand.
        std::set<StrandId> post(rec.created.begin(), rec.created.end());
        for (const auto& [x, y] : rec.surviving) post.insert(y);
        const auto strands = after.strands();
        CHECK(post == std::set<StrandId>(strands.begin(), strands.end()));
        for (const StrandId& x : d.strands())
          CHECK(rec.surviving.count(x) + std::count(rec.destroyed.begin(), rec.destroyed.end(), x) == 1);

        CHECK(restores(rec));
        ++checked;
      }
  CHECK(checked > 500);
}

TEST_CASE("R3 on the triangle") {
  const auto d = triangle();
  const auto sites = find_move_sites(d, MoveKind::r3);
  REQUIRE(sites.size() == 1);
  const auto [after, rec] = apply_move(d, sites[0]);
  CHECK(after.crossing_count() == 3);
  CHECK(rec.created.size() == 3);
  CHECK(rec.destroyed.size() == 3);
  CHECK(find_move_sites(after, MoveKind::r3).size() == 1);
  CHECK_FALSE(after.same_as(d));
  CHECK(restores(rec));
}

TEST_CASE("no move") {
  const auto d = *fixtures::diagram("trefoil");
  const auto [after, rec] = apply_move(d, NoMove{});
  CHECK(after == d);
  CHECK(rec.created.empty());
  CHECK(rec.destroyed.empty());
  CHECK(rec.surviving.size() == 6);
}

TEST_CASE("directive text round-trips") {
  for (const char* text : {"R1+ s=3 v=A", "R1+ f=1 v=B", "R1- c=1 loop=2", "R2+ s=1 t=3 over=t",
                           "R2- c1=1 c2=4", "R3 c1=1 c2=2 c3=3", "none"})
    CHECK(format_move(parse_move(text)) == text);
  CHECK(parse_move("R1- c=2 loop=5") == MoveSpec{R1Remove{1, 5}});
  CHECK(parse_move("R1+ s=3 v=A") == MoveSpec{R1Add{StrandId::semiarc(3), 'A', false}});

  for (const auto& d : corpus())
    for (MoveKind k : all_kinds)
      for (const auto& spec : find_move_sites(d, k)) CHECK(parse_move(format_move(spec)) == spec);

  CHECK_THROWS_AS(parse_move("R4 c=1"), ParseError);
  CHECK_THROWS_AS(parse_move("R1+ v=A"), ParseError);
  CHECK_THROWS_AS(parse_move("R1- c=x loop=1"), ParseError);
  CHECK_THROWS_AS(parse_move(""), ParseError);

  const auto script = parse_move_script("# example\nR1+ f=1 v=A\n\nR1- c=1 loop=1\n");
  CHECK(script.size() == 2);
  CHECK_THROWS_WITH_AS(parse_move_script("R1+ f=1 v=A\nbogus\n"), doctest::Contains("line 2"),
                       ParseError);
}
