#include <algorithm>
#include <numeric>
#include <set>

#include "bikei/fixtures.hpp"
#include "bikei/homset.hpp"
#include "doctest.h"

using namespace bikei;

namespace {

LinkDiagram diag(const char* name) { return *fixtures::diagram(name); }
BikeiTable table(const char* name) { return *fixtures::bikei(name); }

std::vector<int> values(const Coloring& c) {
  std::vector<int> out;
  for (const auto& [s, v] : c) out.push_back(v);
  return out;
}

// Colorings by exhaustive assignment, checked relation by relation.
std::vector<Coloring> brute_colorings(const LinkDiagram& d, const BikeiTable& t) {
  const auto strands = d.strands();
  std::vector<Coloring> out;
  std::vector<int> v(strands.size(), 1);
  while (true) {
    Coloring c;
    for (std::size_t i = 0; i < strands.size(); ++i) c[strands[i]] = v[i];
    bool ok = true;
    for (const auto& x : d.crossings()) {
      auto col = [&](int k) { return c.at(StrandId::semiarc(x[k])); };
      ok = ok && col(2) == t.under(col(0), col(1)) && col(0) == t.under(col(2), col(3)) &&
           col(3) == t.over(col(1), col(0)) && col(1) == t.over(col(3), col(2));
    }
    if (ok) out.push_back(c);
    int k = static_cast<int>(v.size()) - 1;
    while (k >= 0 && v[k] == t.size()) v[k--] = 1;
    if (k < 0) break;
    ++v[k];
  }
  return out;
}

// Orbits of colorings under semiarc permutations that carry the crossing
// list onto itself, allowing re-rooting and (optionally) one global reversal.
std::set<std::set<int>> oracle_orbits(const LinkDiagram& d, const std::vector<Coloring>& cols,
                                      bool reflect) {
  const auto arcs = d.semiarcs();
  std::multiset<std::array<int, 4>> target;
  for (const auto& c : d.crossings()) {
    target.insert(c.slot);
    target.insert(c.rotated(2).slot);
  }
  std::vector<std::map<int, int>> perms;
  auto perm = arcs;
  do {
    std::map<int, int> pi;
    for (std::size_t i = 0; i < arcs.size(); ++i) pi[arcs[i]] = perm[i];
    for (bool refl : {false, true}) {
      if (refl && !reflect) continue;
      std::multiset<std::array<int, 4>> img;
      for (const auto& c : d.crossings()) {
        const Crossing x = refl ? c.reflected() : c;
        const Crossing m{{pi[x[0]], pi[x[1]], pi[x[2]], pi[x[3]]}};
        img.insert(m.slot);
        img.insert(m.rotated(2).slot);
      }
      if (img == target) perms.push_back(pi);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::map<Coloring, int> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i]] = static_cast<int>(i);
  std::set<std::set<int>> orbits;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    std::set<int> orbit;
    for (const auto& pi : perms) {
      Coloring moved;
      for (const auto& [s, v] : cols[i]) moved[StrandId::semiarc(pi.at(s.id))] = v;
      orbit.insert(index.at(moved));
    }
    orbits.insert(orbit);
  }
  return orbits;
}

std::set<std::set<int>> as_sets(const std::vector<std::vector<int>>& v) {
  std::set<std::set<int>> out;
  for (const auto& o : v) out.insert(std::set<int>(o.begin(), o.end()));
  return out;
}

}  // namespace

TEST_CASE("Hopf link colorings") {
  const auto cols = enumerate_colorings(diag("hopf"), table("hopf3"));
  std::vector<std::vector<int>> rows;
  for (const auto& c : cols) rows.push_back(values(c));
  CHECK(rows == std::vector<std::vector<int>>{
                    {1, 1, 1, 1}, {1, 2, 1, 2}, {2, 1, 2, 1}, {2, 2, 2, 2}, {3, 3, 3, 3}});
}

TEST_CASE("coloring counts") {
  CHECK(counting_invariant(diag("unknot"), table("z2plus")) == 2);
  CHECK(counting_invariant(diag("unlink2"), table("hopf3")) == 9);
  CHECK(counting_invariant(diag("unknot"), table("fox3")) == 3);
  CHECK(counting_invariant(diag("trefoil"), table("z2plus")) == 2);
  const auto fox = enumerate_colorings(diag("trefoil"), table("fox3"));
  CHECK(fox.size() == 9);
  CHECK(std::count_if(fox.begin(), fox.end(), [](const Coloring& c) {
          const auto v = values(c);
          return std::set<int>(v.begin(), v.end()).size() > 1;
        }) == 6);
}

TEST_CASE("enumeration matches brute force") {
  std::vector<LinkDiagram> ds;
  for (const auto& name : fixtures::diagram_names()) ds.push_back(*fixtures::diagram(name));
  ds.push_back(parse_diagram("X 2 4 6 1\nX 3 1 6 5\nX 3 5 4 2\n"));
  for (const auto& d : ds)
    for (const auto& t : fixtures::verified_bikeis()) {
      const auto cols = enumerate_colorings(d, t);
      CHECK(cols == brute_colorings(d, t));
      for (const auto& c : cols) CHECK(is_valid_coloring(d, c, t));
    }
  CHECK_FALSE(is_valid_coloring(diag("hopf"), {{StrandId::semiarc(1), 1}}, table("hopf3")));
}

TEST_CASE("transport through the kink script") {
  const auto z2 = table("z2plus");
  const auto unknot = diag("unknot");
  const auto e1 = make_element(unknot, {{StrandId::loop(1), 1}});
  const auto e2 = make_element(unknot, {{StrandId::loop(1), 2}});
  CHECK(e1.current_coloring == e1.base_coloring);
  CHECK(homset_equal(e1, e1));
  CHECK_FALSE(homset_equal(e1, e2));

  const auto [kink, r1] = apply_move(unknot, R1Add{StrandId::loop(1), 'A', false});
  const auto k1 = transport(e1, r1, z2);
  CHECK(k1.current_coloring ==
        Coloring{{StrandId::semiarc(1), 1}, {StrandId::semiarc(2), 2}});
  CHECK(k1.history.size() == 1);

  const auto [loop, r2] = apply_move(kink, R1Remove{0, 1});
  const auto f1 = transport(k1, r2, z2);
  CHECK(f1.current_coloring == Coloring{{StrandId::loop(1), 2}});
  CHECK(f1.base_coloring == Coloring{{StrandId::loop(1), 1}});

  CHECK_FALSE(homset_equal(f1, e2));
  CHECK(homset_equal(f1, e1));
  const auto same = same_colored_diagram(f1.current_coloring, e2.current_coloring,
                                         f1.current_diagram, SymmetryMode::none());
  REQUIRE(same);
  CHECK(same->is_identity());

  const auto [same_d, idle] = apply_move(unknot, NoMove{});
  const auto moved = transport(e1, idle, z2);
  CHECK(moved.current_coloring == e1.current_coloring);

  CHECK_THROWS_AS(transport(e1, r2, z2), HomsetError);
  CHECK_THROWS_AS(homset_equal(e1, make_element(diag("hopf"), enumerate_colorings(diag("hopf"), z2)[0])),
                  HomsetError);
}

TEST_CASE("transport fails loudly on a broken table") {
  const auto [kink, r1] = apply_move(diag("unknot"), R1Add{StrandId::loop(1), 'A', false});
  CHECK_THROWS_AS(transport_coloring({{StrandId::loop(1), 1}}, r1, table("plus3_broken")),
                  IllposedMove);
}

TEST_CASE("transport is a bijection for every move site") {
  for (const auto& name : fixtures::diagram_names()) {
    const auto d = *fixtures::diagram(name);
    for (const auto& t : fixtures::verified_bikeis()) {
      const auto before = enumerate_colorings(d, t);
      for (MoveKind k : {MoveKind::r1_add, MoveKind::r1_remove, MoveKind::r2_add,
                         MoveKind::r2_remove, MoveKind::r3})
        for (const auto& spec : find_move_sites(d, k)) {
          const auto [after, rec] = apply_move(d, spec);
          std::set<Coloring> images;
          for (const auto& c : before) images.insert(transport_coloring(c, rec, t));
          const auto want = enumerate_colorings(after, t);
          CHECK(images == std::set<Coloring>(want.begin(), want.end()));
          CHECK(images.size() == before.size());
        }
    }
  }
}

TEST_CASE("same_colored_diagram") {
  const auto u = diag("unlink2");
  const Coloring c12{{StrandId::loop(1), 1}, {StrandId::loop(2), 2}};
  const Coloring c21{{StrandId::loop(1), 2}, {StrandId::loop(2), 1}};
  CHECK_FALSE(same_colored_diagram(c12, c21, u, SymmetryMode::none()));
  const auto swap = same_colored_diagram(c12, c21, u, SymmetryMode::with({}));
  REQUIRE(swap);
  CHECK(swap->strand_map.at(StrandId::loop(1)) == StrandId::loop(2));
  for (auto mode : {SymmetryMode::none(), SymmetryMode::with({}), SymmetryMode::with({true, true})}) {
    const auto id = same_colored_diagram(c12, c12, u, mode);
    REQUIRE(id);
    CHECK(id->is_identity());
  }

  const auto t = diag("trefoil");
  const auto fox = enumerate_colorings(t, table("fox3"));
  const auto w = same_colored_diagram(fox[1], fox[2], t, SymmetryMode::with({true, false}));
  REQUIRE(w);
  CHECK(push_forward(fox[1], *w) == fox[2]);
  CHECK_FALSE(same_colored_diagram(fox[0], fox[1], t, SymmetryMode::with({true, true})));
}

TEST_CASE("trefoil Fox colorings: orbits and distinctness") {
  const auto t = diag("trefoil");
  const auto rep = symmetry_collisions(t, table("fox3"), SymmetryMode::with({true, false}));
  CHECK(rep.colorings.size() == 9);
  CHECK(rep.group_order == 6);
  CHECK(as_sets(rep.orbits) == oracle_orbits(t, rep.colorings, true));
  for (const auto& o : rep.orbits) {
    const auto vals = values(rep.colorings[o[0]]);
    const bool constant = std::set<int>(vals.begin(), vals.end()).size() == 1;
    CHECK((o.size() == 1) == constant);
  }
  for (const auto& col : rep.collisions) {
    CHECK(col.first < col.second);
    CHECK(push_forward(rep.colorings[col.first], col.witness) == rep.colorings[col.second]);
  }
  CHECK(rep.collisions.size() == 15);

  std::vector<HomsetElement> es;
  for (const auto& c : rep.colorings) es.push_back(make_element(t, c));
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = 0; j < es.size(); ++j) CHECK(homset_equal(es[i], es[j]) == (i == j));
}

TEST_CASE("symmetry collisions on other diagrams") {
  CHECK(symmetry_collisions(diag("unknot"), table("z2plus"), SymmetryMode::with({true, true}))
            .collisions.empty());

  const auto u = symmetry_collisions(diag("unlink2"), table("hopf3"), SymmetryMode::with({}));
  CHECK(u.collisions.size() == 3);
  for (const auto& c : u.collisions) {
    const auto a = values(u.colorings[c.first]), b = values(u.colorings[c.second]);
    CHECK(a[0] == b[1]);
    CHECK(a[1] == b[0]);
    CHECK(a[0] != a[1]);
  }
  CHECK(u.orbits.size() == 6);

  for (const char* name : {"hopf", "trefoil"})
    for (const auto& tb : fixtures::verified_bikeis())
      for (bool refl : {false, true}) {
        const auto d = *fixtures::diagram(name);
        const auto rep = symmetry_collisions(d, tb, SymmetryMode::with({refl, false}));
        CHECK(as_sets(rep.orbits) == oracle_orbits(d, rep.colorings, refl));
      }

  const auto none = symmetry_collisions(diag("trefoil"), table("fox3"), SymmetryMode::none());
  CHECK(none.collisions.empty());
  CHECK(none.orbits.size() == 9);
}

TEST_CASE("coloring JSON") {
  const Coloring c{{StrandId::semiarc(1), 2}, {StrandId::semiarc(3), 1}, {StrandId::loop(1), 3}};
  const auto j = coloring_to_json(c);
  CHECK(j.dump() == R"({"s1":2,"s3":1,"f1":3})");
  CHECK(coloring_from_json(nlohmann::json::parse(j.dump())) == c);
  CHECK(coloring_from_json(nlohmann::json::parse(R"({"3":1,"1":2,"f1":3})")) == c);

  const auto e = make_element(diag("unknot"), {{StrandId::loop(1), 1}});
  const auto ej = element_to_json(e);
  CHECK(ej.contains("base"));
  CHECK(ej.contains("history"));
}
