#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bikei/diagram.hpp"

namespace bikei {

/// Structure-preserving relabeling of a diagram. Crossing c, read through
/// the strand map (and reversed when `reflected`), then rotated by
/// rotation[c], equals crossing crossing_map[c].
struct DiagramAutomorphism {
  std::map<StrandId, StrandId> strand_map;
  std::vector<int> crossing_map;
  std::vector<int> rotation;
  bool reflected = false;

  bool is_identity() const;
  friend bool operator==(const DiagramAutomorphism&, const DiagramAutomorphism&) = default;
  friend auto operator<=>(const DiagramAutomorphism&, const DiagramAutomorphism&) = default;
};

struct SymmetryFlags {
  bool allow_reflection = false;
  bool allow_mirror = false;  // rotations by 1 or 3 (over/under swap)
};

DiagramAutomorphism identity_automorphism(const LinkDiagram& d);

/// `second` after `first`.
DiagramAutomorphism compose(const DiagramAutomorphism& second, const DiagramAutomorphism& first);
DiagramAutomorphism inverse(const DiagramAutomorphism& a);

/// Checks the defining condition of a relabeling from `from` onto `to`.
bool is_isomorphism(const LinkDiagram& from, const LinkDiagram& to,
                    const DiagramAutomorphism& a, SymmetryFlags flags);

/// All automorphisms, sorted, identity included. Exhaustive; meant for
/// diagrams with at most a dozen or so crossings.
std::vector<DiagramAutomorphism> automorphisms(const LinkDiagram& d, SymmetryFlags flags);

/// Some isomorphism from `from` onto `to` agreeing with `seed` wherever the
/// seed is defined. When colorings are supplied, the match must also carry
/// from_colors[x] to to_colors[image of x].
std::optional<DiagramAutomorphism> find_isomorphism(
    const LinkDiagram& from, const LinkDiagram& to, const std::map<StrandId, StrandId>& seed,
    SymmetryFlags flags = {}, const Coloring* from_colors = nullptr,
    const Coloring* to_colors = nullptr);

/// c ∘ a⁻¹: the coloring that gives a(x) the color c gives x.
Coloring push_forward(const Coloring& c, const DiagramAutomorphism& a);

}  // namespace bikei
