#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bikei/moves.hpp"
#include "bikei/presentation.hpp"

namespace bikei {

class TietzeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The relation is one side-order of the named axiom identity with the
/// variables x, y, z replaced by `args`.
struct AxiomInstance {
  Axiom axiom;
  std::vector<Word> args;
};

/// The relation holds in every solution of the listed relations (indices
/// into the presentation at the time of the step), checked by enumeration
/// over each bundled fixture bikei.
struct SolverVerified {
  std::vector<int> support;
};

using Justification = std::variant<std::monostate, AxiomInstance, SolverVerified>;

/// New generator plus the relation `symbol = definition`.
struct AddGenerator {
  std::string symbol;
  Word definition;
};

/// Eliminates `symbol` using a relation `symbol = W` (either side order)
/// with `symbol` absent from W: that relation is dropped and W is
/// substituted everywhere else. `via` picks the relation when several
/// qualify.
struct RemoveGenerator {
  std::string symbol;
  std::optional<int> via;
};

struct AddRelation {
  Relation relation;
  Justification justification;
};

struct RemoveRelation {
  int index = 0;
  Justification justification;  // derivability from the other relations
};

using TietzeStep = std::variant<AddGenerator, RemoveGenerator, AddRelation, RemoveRelation>;

struct TietzeScript {
  std::vector<TietzeStep> steps;
};

std::string format_step(const TietzeStep& s);

/// Both sides of an axiom identity in the variables x, y, z.
Relation axiom_identity(Axiom a, const std::vector<Word>& args);

/// Throws TietzeError with the failing step number.
Presentation tietze_apply(const Presentation& p, const TietzeScript& s);

/// Script that turns `before` into the fundamental presentation of r.after,
/// up to the renaming returned by tietze_renaming. Throws TietzeError when
/// `before` is not the fundamental presentation of r.before.
TietzeScript move_to_tietze(const MoveRecord& r, const Presentation& before);

/// Script symbol -> post-move symbol, for every generator whose name
/// differs after applying move_to_tietze(r, ...).
std::map<std::string, std::string> tietze_renaming(const MoveRecord& r);

}  // namespace bikei
