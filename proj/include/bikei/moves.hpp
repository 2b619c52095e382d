#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bikei/diagram.hpp"

namespace bikei {

/// Pattern mismatch or unknown site.
class MoveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MoveKind { none, r1_add, r1_remove, r2_add, r2_remove, r3 };

std::string_view move_kind_name(MoveKind k) noexcept;

/// Identity move; its record changes nothing.
struct NoMove {
  friend bool operator==(const NoMove&, const NoMove&) = default;
};

/// Reidemeister I kink on a semiarc or on a free loop. Variant A puts the
/// loop in slots (0,1); variant B is the same kink with the crossing
/// switched. `flip` mirrors the kink to the other side of the strand.
struct R1Add {
  StrandId target;
  char variant = 'A';
  bool flip = false;
  friend bool operator==(const R1Add&, const R1Add&) = default;
};

/// Remove the kink at `crossing` whose loop semiarc is `loop`.
struct R1Remove {
  int crossing = 0;  // 0-based
  SemiarcId loop = 0;
  friend bool operator==(const R1Remove&, const R1Remove&) = default;
};

/// Push semiarc s across semiarc t, creating a bigon. `s_over` selects the
/// strand on top, `flip` the side of the bigon, `cross` pairs the first end
/// of s with the second end of t instead of the first.
struct R2Add {
  SemiarcId s = 0;
  SemiarcId t = 0;
  bool s_over = true;
  bool flip = false;
  bool cross = false;
  friend bool operator==(const R2Add&, const R2Add&) = default;
};

struct R2Remove {
  int c1 = 0;  // 0-based
  int c2 = 0;
  friend bool operator==(const R2Remove&, const R2Remove&) = default;
};

/// Slide the strand that is over at two of the three crossings across the
/// third. Crossing order is free; roles are found by matching.
struct R3Move {
  int c1 = 0;  // 0-based
  int c2 = 0;
  int c3 = 0;
  friend bool operator==(const R3Move&, const R3Move&) = default;
};

using MoveSpec = std::variant<NoMove, R1Add, R1Remove, R2Add, R2Remove, R3Move>;

MoveKind kind_of(const MoveSpec& m) noexcept;

/// Directive text, e.g. `R1+ s=3 v=A`, `R1- c=1 loop=2`, `R3 c1=1 c2=2 c3=3`.
/// Crossing numbers are 1-based in text.
std::string format_move(const MoveSpec& m);
MoveSpec parse_move(std::string_view directive);
/// One directive per line; '#' comments and blank lines skipped.
std::vector<MoveSpec> parse_move_script(std::string_view text);

struct MoveRecord {
  MoveSpec spec;
  /// Pre-move strand -> post-move strand for every strand that persists.
  /// Two pre-move strands may land on the same post-move strand (merges).
  std::map<StrandId, StrandId> surviving;
  std::vector<StrandId> created;    // post-move labels
  std::vector<StrandId> destroyed;  // pre-move labels
  /// Move that undoes this one when applied to `after`.
  MoveSpec inverse;
  LinkDiagram before;
  LinkDiagram after;

  MoveKind kind() const noexcept { return kind_of(spec); }
};

/// Rewrites d. Never checks planarity.
std::pair<LinkDiagram, MoveRecord> apply_move(const LinkDiagram& d, const MoveSpec& m);

/// Every site where apply_move(d, spec) succeeds for the given kind, in a
/// deterministic order.
std::vector<MoveSpec> find_move_sites(const LinkDiagram& d, MoveKind kind);

/// Composition of surviving maps of consecutive records.
std::map<StrandId, StrandId> compose_surviving(const std::map<StrandId, StrandId>& first,
                                               const std::map<StrandId, StrandId>& second);

}  // namespace bikei
