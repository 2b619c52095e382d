#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <map>
#include <vector>

#include "bikei/table.hpp"

namespace bikei {

using SemiarcId = int;

/// A diagrammatic generator: either a semiarc (by label) or a crossing-free
/// loop (by 1-based index among the diagram's free loops).
struct StrandId {
  enum class Kind : std::uint8_t { semiarc, loop };
  Kind kind = Kind::semiarc;
  int id = 0;

  static constexpr StrandId semiarc(int n) noexcept { return {Kind::semiarc, n}; }
  static constexpr StrandId loop(int k) noexcept { return {Kind::loop, k}; }
  bool is_loop() const noexcept { return kind == Kind::loop; }

  /// Generator symbol: s<N> for semiarcs, f<N> for free loops.
  std::string symbol() const;
  /// Inverse of symbol(); throws ParseError on anything else.
  static StrandId from_symbol(std::string_view sym);

  friend auto operator<=>(const StrandId&, const StrandId&) = default;
};

/// Total map from a diagram's strands to bikei elements.
using Coloring = std::map<StrandId, Element>;

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Crossing quadruple (u_a, o_a, u_b, o_b), read counterclockwise from an
/// under-strand endpoint. Even slots are under, odd slots are over.
struct Crossing {
  std::array<SemiarcId, 4> slot{};

  SemiarcId operator[](int k) const noexcept { return slot[static_cast<std::size_t>(k & 3)]; }

  /// Re-root r positions further round: result[k] = slot[k + r].
  Crossing rotated(int r) const noexcept;
  /// Reverse the cyclic order, keeping slot 0 fixed.
  Crossing reflected() const noexcept;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Equal up to rotation by 2 (re-rooting at the other under endpoint).
bool equivalent(const Crossing& a, const Crossing& b) noexcept;

/// Position of one semiarc end: crossing index (0-based) and slot 0..3.
struct SlotRef {
  int crossing = 0;
  int slot = 0;
  friend auto operator<=>(const SlotRef&, const SlotRef&) = default;
};

/// Abstract crossing code plus a number of crossing-free circles.
/// Every semiarc label occurs in exactly two crossing slots. Planarity is not
/// tracked.
class LinkDiagram {
 public:
  LinkDiagram() = default;
  /// Throws DiagramError when a label does not occur exactly twice.
  LinkDiagram(std::vector<Crossing> crossings, int free_loops);

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }
  int free_loops() const noexcept { return free_loops_; }

  /// Sorted semiarc labels.
  const std::vector<SemiarcId>& semiarcs() const noexcept { return semiarcs_; }
  /// Semiarcs (ascending) followed by free loops f1..fk.
  std::vector<StrandId> strands() const;
  bool has_semiarc(SemiarcId s) const noexcept;
  SemiarcId max_label() const noexcept { return semiarcs_.empty() ? 0 : semiarcs_.back(); }

  /// The two slots holding s, in (crossing, slot) order.
  std::array<SlotRef, 2> occurrences(SemiarcId s) const;
  SemiarcId at(SlotRef r) const noexcept { return crossings_[r.crossing][r.slot]; }

  /// Identical crossing lists up to per-crossing rotation by 2.
  bool same_as(const LinkDiagram& other) const noexcept;

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;

 private:
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  std::vector<SemiarcId> semiarcs_;
  std::vector<SlotRef> occ_;  // 2 entries per semiarc, parallel to semiarcs_
};

/// One closed strand: semiarcs in traversal order, or a free loop.
struct Component {
  std::vector<SemiarcId> semiarcs;
  int free_loop = 0;  // 1-based loop index when semiarcs is empty
  friend bool operator==(const Component&, const Component&) = default;
};

/// Diagram text format: `X a b c d` crossings, optional single `O k`, '#'
/// comments.
LinkDiagram parse_diagram(std::string_view text);
std::string serialize_diagram(const LinkDiagram& d);

std::vector<Component> components(const LinkDiagram& d);

}  // namespace bikei
