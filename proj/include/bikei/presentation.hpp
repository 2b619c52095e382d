#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bikei/diagram.hpp"
#include "bikei/table.hpp"
#include "bikei/word.hpp"

namespace bikei {

class PresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// left = right
struct Relation {
  Word left;
  Word right;

  friend bool operator==(const Relation&, const Relation&) = default;
  friend bool operator<(const Relation& a, const Relation& b) {
    if (a.left == b.left) return a.right < b.right;
    return a.left < b.left;
  }
};

std::string format_relation(const Relation& r);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Relation> relations;

  int generator_index(std::string_view symbol) const noexcept;  // -1 if absent
  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Generator values in the order of Presentation::generators.
using Assignment = std::vector<Element>;

/// Generators s<N> for semiarcs (ascending) then f<K> for free loops; four
/// relations per crossing (u_a, o_a, u_b, o_b):
///   u_b = u_a _* o_a, u_a = u_b _* o_b, o_b = o_a ^* u_a, o_a = o_b ^* u_b.
Presentation fundamental_presentation(const LinkDiagram& d);

/// The four relations of one crossing, in the order above.
std::vector<Relation> crossing_relations(const Crossing& c);

/// Throws PresentationError on a generator missing from the assignment.
Element evaluate_word(const Word& w, const std::map<std::string, Element>& assignment,
                      const BikeiTable& t);

bool satisfies(const Relation& r, const std::map<std::string, Element>& assignment,
               const BikeiTable& t);

/// All assignments satisfying every relation, in lexicographic order.
/// Throws PresentationError when a relation uses an undeclared generator.
std::vector<Assignment> enumerate_presentation_homset(const Presentation& p,
                                                      const BikeiTable& t);

/// Same search with some generators pinned in advance.
std::vector<Assignment> solve_presentation(const Presentation& p, const BikeiTable& t,
                                           const std::map<std::string, Element>& fixed);

/// Every relation is g = h _* k or g = h ^* k with g, h, k generators.
bool is_short_form(const Presentation& p);

/// `gen a b c` then `rel <word> = <word>` lines; '#' comments.
Presentation parse_presentation(std::string_view text);
std::string serialize_presentation(const Presentation& p);

/// Same generator set and same relation multiset, ignoring order.
bool same_presentation(const Presentation& a, const Presentation& b);

/// Renames generators; symbols absent from `names` are kept.
Presentation relabel(const Presentation& p, const std::map<std::string, std::string>& names);

}  // namespace bikei
