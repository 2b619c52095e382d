#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "bikei/automorphism.hpp"
#include "bikei/diagram.hpp"
#include "bikei/moves.hpp"
#include "bikei/table.hpp"

namespace bikei {

/// Raised when a move leaves the colors of new strands undetermined or
/// contradictory. Cannot happen for verified tables and valid records.
class IllposedMove : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class HomsetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All colorings of d by t, sorted by the value tuple over d.strands().
std::vector<Coloring> enumerate_colorings(const LinkDiagram& d, const BikeiTable& t);

std::size_t counting_invariant(const LinkDiagram& d, const BikeiTable& t);

/// Checks all four relations at every crossing and that every strand of d
/// has a color in range.
bool is_valid_coloring(const LinkDiagram& d, const Coloring& c, const BikeiTable& t);

/// A homset element: the coloring of a fixed base diagram, together with
/// how it currently looks after the moves in `history`.
struct HomsetElement {
  LinkDiagram base_diagram;
  Coloring base_coloring;
  LinkDiagram current_diagram;
  Coloring current_coloring;
  std::vector<MoveRecord> history;
};

HomsetElement make_element(const LinkDiagram& d, const Coloring& c);

/// Colors after the move: surviving strands keep theirs, new strands are
/// solved from the new crossings. Throws IllposedMove unless exactly one
/// solution exists.
Coloring transport_coloring(const Coloring& c, const MoveRecord& r, const BikeiTable& t);

HomsetElement transport(const HomsetElement& e, const MoveRecord& r, const BikeiTable& t);

/// Equality of base colorings. Throws HomsetError when the base diagrams
/// differ.
bool homset_equal(const HomsetElement& a, const HomsetElement& b);

/// `search == false` means plain function equality.
struct SymmetryMode {
  bool search = false;
  SymmetryFlags flags;

  static SymmetryMode none() { return {}; }
  static SymmetryMode with(SymmetryFlags f) { return {true, f}; }
};

/// Some automorphism phi with c2 = c1 o phi^-1, preferring the identity.
std::optional<DiagramAutomorphism> same_colored_diagram(const Coloring& c1, const Coloring& c2,
                                                        const LinkDiagram& d,
                                                        SymmetryMode mode);

struct Collision {
  int first = 0;  // indices into SymmetryReport::colorings, first < second
  int second = 0;
  DiagramAutomorphism witness;
};

struct SymmetryReport {
  std::vector<Coloring> colorings;
  std::size_t group_order = 0;
  std::vector<Collision> collisions;
  /// Partition of coloring indices; each orbit ascending, orbits ordered by
  /// their smallest member.
  std::vector<std::vector<int>> orbits;
};

/// Colorings related by an automorphism. Automorphisms that swap over and
/// under may map a coloring to an invalid one; such images are ignored.
SymmetryReport symmetry_collisions(const LinkDiagram& d, const BikeiTable& t,
                                   SymmetryMode mode);

/// {"s1": 1, ..., "f1": 2} in strand order.
nlohmann::ordered_json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const nlohmann::json& j);
nlohmann::ordered_json element_to_json(const HomsetElement& e);

}  // namespace bikei
