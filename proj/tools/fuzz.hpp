#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bikei/diagram.hpp"
#include "bikei/table.hpp"

namespace bikei::cli {

struct FuzzStep {
  int step = 0;
  std::string move;
  int crossings = 0;
  std::size_t count = 0;
};

struct FuzzResult {
  bool pass = true;
  std::string failure;  // empty on success
  std::size_t initial_count = 0;
  std::vector<FuzzStep> trace;
};

/// Random walk of `moves` Reidemeister moves (mt19937_64 seeded with
/// `seed`). Each step draws a move kind uniformly among the kinds with at
/// least one site, then a site uniformly. After every step it checks that
/// the coloring count is unchanged, that transport maps the colorings
/// bijectively onto the new diagram's colorings, and that transporting
/// along the inverse move returns every coloring to itself on a diagram
/// isomorphic to the start.
FuzzResult run_fuzz(const LinkDiagram& d, const BikeiTable& t, int moves, std::uint64_t seed);

}  // namespace bikei::cli
