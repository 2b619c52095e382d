#include "bikei/fixtures.hpp"

namespace bikei::fixtures {

const std::vector<std::string>& bikei_names() {
  static const std::vector<std::string> names{"hopf3", "z2plus", "fox3"};
  return names;
}

const std::vector<std::string>& diagram_names() {
  static const std::vector<std::string> names{"unknot", "hopf", "trefoil", "unlink2"};
  return names;
}

std::optional<BikeiTable> bikei(std::string_view name) {
  if (name == "hopf3")
    return BikeiTable(3, {{1, 1, 2}, {2, 2, 1}, {3, 3, 3}}, {{1, 1, 1}, {2, 2, 2}, {3, 3, 3}});
  if (name == "z2plus") return BikeiTable(2, {{2, 2}, {1, 1}}, {{2, 2}, {1, 1}});
  if (name == "fox3") return dihedral_bikei(3);
  if (name == "plus3_broken")
    return BikeiTable(3, {{2, 2, 2}, {3, 3, 3}, {1, 1, 1}}, {{1, 1, 1}, {2, 2, 2}, {3, 3, 3}});
  if (name == "trivial1") return BikeiTable(1, {{1}}, {{1}});
  return std::nullopt;
}

std::optional<LinkDiagram> diagram(std::string_view name) {
  // Hopf: x=1, y=2, z=3, w=4, giving z = x _* y, z = x ^* y, w = y _* x,
  // w = y ^* x among the crossing relations.
  if (name == "unknot") return parse_diagram("O 1");
  if (name == "hopf") return parse_diagram("X 1 2 3 4\nX 2 1 4 3");
  if (name == "trefoil") return parse_diagram("X 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2");
  if (name == "unlink2") return parse_diagram("O 2");
  return std::nullopt;
}

std::optional<Presentation> presentation(std::string_view name) {
  if (name == "trefoil2")
    return parse_presentation(
        "gen x y\n"
        "rel (x _* y) ^* y = (y ^* x) _* x\n"
        "rel x ^* ((x _* y) ^* y) = y _* ((x _* y) ^* y)\n");
  return std::nullopt;
}

const std::vector<BikeiTable>& verified_bikeis() {
  static const std::vector<BikeiTable> tables = [] {
    std::vector<BikeiTable> out;
    for (const auto& n : bikei_names()) out.push_back(*bikei(n));
    return out;
  }();
  return tables;
}

}  // namespace bikei::fixtures
