#include "fuzz.hpp"

#include <random>
#include <set>

#include "bikei/automorphism.hpp"
#include "bikei/homset.hpp"
#include "bikei/moves.hpp"

namespace bikei::cli {

namespace {

/// Empty when the round trip through the inverse move restores c.
std::string round_trip_problem(const LinkDiagram& start, const Coloring& c, const Coloring& moved,
                               const MoveRecord& rec, const BikeiTable& t) {
  const auto [back_diagram, back] = apply_move(rec.after, rec.inverse);
  const Coloring restored = transport_coloring(moved, back, t);
  const auto through = compose_surviving(rec.surviving, back.surviving);
  std::map<StrandId, int> hits;
  for (const auto& [x, y] : through) ++hits[y];
  std::map<StrandId, StrandId> seed;
  for (const auto& [x, y] : through) {
    if (restored.at(y) != c.at(x)) return "inverse move changes the color of " + x.symbol();
    // Strands merged by the move cannot pin the isomorphism.
    if (hits[y] == 1) seed[x] = y;
  }
  if (!find_isomorphism(start, back_diagram, seed, {}, &c, &restored))
    return "inverse move does not restore the colored diagram";
  return {};
}

}  // namespace

FuzzResult run_fuzz(const LinkDiagram& d, const BikeiTable& t, int moves, std::uint64_t seed) {
  FuzzResult res;
  std::mt19937_64 rng(seed);
  LinkDiagram cur = d;
  auto colorings = enumerate_colorings(cur, t);
  res.initial_count = colorings.size();

  const MoveKind kinds[] = {MoveKind::r1_add, MoveKind::r1_remove, MoveKind::r2_add,
                            MoveKind::r2_remove, MoveKind::r3};
  for (int step = 1; step <= moves; ++step) {
    std::vector<std::vector<MoveSpec>> options;
    for (MoveKind k : kinds) {
      auto sites = find_move_sites(cur, k);
      if (!sites.empty()) options.push_back(std::move(sites));
    }
    if (options.empty()) {
      res.pass = false;
      res.failure = "step " + std::to_string(step) + ": no move sites";
      return res;
    }
    const auto& pool = options[rng() % options.size()];
    const MoveSpec spec = pool[rng() % pool.size()];
    FuzzStep entry{step, format_move(spec), 0, 0};

    auto fail = [&](const std::string& why) {
      res.pass = false;
      res.failure = "step " + std::to_string(step) + " (" + entry.move + "): " + why;
      res.trace.push_back(entry);
      return res;
    };

    try {
      auto [next, rec] = apply_move(cur, spec);
      entry.crossings = next.crossing_count();
      const auto after = enumerate_colorings(next, t);
      entry.count = after.size();
      if (after.size() != res.initial_count)
        return fail("count changed from " + std::to_string(res.initial_count) + " to " +
                    std::to_string(after.size()));

      std::set<Coloring> images;
      for (const Coloring& c : colorings) {
        const Coloring moved = transport_coloring(c, rec, t);
        if (!is_valid_coloring(next, moved, t)) return fail("transported coloring is invalid");
        images.insert(moved);
        if (auto why = round_trip_problem(cur, c, moved, rec, t); !why.empty()) return fail(why);
      }
      if (images != std::set<Coloring>(after.begin(), after.end()))
        return fail("transport is not a bijection onto the new colorings");

      cur = std::move(next);
      colorings = after;
    } catch (const std::exception& e) {
      return fail(e.what());
    }
    res.trace.push_back(entry);
  }
  return res;
}

}  // namespace bikei::cli
