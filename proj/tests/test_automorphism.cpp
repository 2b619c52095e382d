#include <set>

#include "bikei/automorphism.hpp"
#include "bikei/fixtures.hpp"
#include "doctest.h"

using namespace bikei;

namespace {

int order_of(const DiagramAutomorphism& a, const LinkDiagram& d) {
  const auto id = identity_automorphism(d);
  auto p = a;
  for (int k = 1; k <= 24; ++k) {
    if (p == id) return k;
    p = compose(a, p);
  }
  return 0;
}

void check_group(const LinkDiagram& d, SymmetryFlags f) {
  const auto g = automorphisms(d, f);
  REQUIRE_FALSE(g.empty());
  CHECK(g.front() == identity_automorphism(d));
  const std::set<DiagramAutomorphism> set(g.begin(), g.end());
  CHECK(set.size() == g.size());
  for (const auto& a : g) {
    CHECK(is_isomorphism(d, d, a, f));
    CHECK(set.count(inverse(a)) == 1);
    CHECK(compose(inverse(a), a) == identity_automorphism(d));
    for (const auto& b : g) CHECK(set.count(compose(a, b)) == 1);
  }
}

}  // namespace

TEST_CASE("trefoil symmetry groups") {
  const auto t = *fixtures::diagram("trefoil");
  CHECK(automorphisms(t, {}).size() == 6);
  const auto refl = automorphisms(t, {true, false});
  CHECK(refl.size() == 6);
  CHECK(automorphisms(t, {true, true}).size() == 12);

  std::multiset<int> orders;
  for (const auto& a : refl) orders.insert(order_of(a, t));
  CHECK(orders.count(3) == 2);
  CHECK(orders.count(1) == 1);

  check_group(t, {});
  check_group(t, {true, false});
  check_group(t, {true, true});
}

TEST_CASE("small groups") {
  const auto u2 = automorphisms(*fixtures::diagram("unlink2"), {});
  REQUIRE(u2.size() == 2);
  CHECK(u2[1].strand_map.at(StrandId::loop(1)) == StrandId::loop(2));
  CHECK(automorphisms(*fixtures::diagram("unknot"), {true, true}).size() == 1);
  check_group(*fixtures::diagram("hopf"), {true, true});
  check_group(*fixtures::diagram("unlink2"), {});
}

TEST_CASE("is_isomorphism rejects a broken map") {
  const auto h = *fixtures::diagram("hopf");
  auto a = identity_automorphism(h);
  CHECK(a.is_identity());
  CHECK(is_isomorphism(h, h, a, {}));
  std::swap(a.strand_map[StrandId::semiarc(1)], a.strand_map[StrandId::semiarc(3)]);
  CHECK_FALSE(a.is_identity());
  CHECK_FALSE(is_isomorphism(h, h, a, {}));
}

TEST_CASE("find_isomorphism honors seeds and colors") {
  const auto h = *fixtures::diagram("hopf");
  const LinkDiagram r({h.crossings()[1], h.crossings()[0].rotated(2)}, 0);
  const auto iso = find_isomorphism(h, r, {});
  REQUIRE(iso);
  CHECK(is_isomorphism(h, r, *iso, {}));

  const auto u = *fixtures::diagram("unlink2");
  const Coloring c12{{StrandId::loop(1), 1}, {StrandId::loop(2), 2}};
  const Coloring c21{{StrandId::loop(1), 2}, {StrandId::loop(2), 1}};
  const auto swap = find_isomorphism(u, u, {}, {}, &c12, &c21);
  REQUIRE(swap);
  CHECK(swap->strand_map.at(StrandId::loop(1)) == StrandId::loop(2));
  CHECK(push_forward(c12, *swap) == c21);
  CHECK_FALSE(find_isomorphism(u, u, {{StrandId::loop(1), StrandId::loop(1)}}, {}, &c12, &c21));
}
