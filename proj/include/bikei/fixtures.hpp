#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bikei/diagram.hpp"
#include "bikei/presentation.hpp"
#include "bikei/table.hpp"

namespace bikei::fixtures {

/// hopf3, z2plus, fox3: the verified tables used throughout.
const std::vector<std::string>& bikei_names();
/// unknot, hopf, trefoil, unlink2.
const std::vector<std::string>& diagram_names();

/// Also knows plus3_broken (x _* y = x + 1 mod 3) and trivial1.
std::optional<BikeiTable> bikei(std::string_view name);
std::optional<LinkDiagram> diagram(std::string_view name);
/// trefoil2: the two-generator trefoil presentation.
std::optional<Presentation> presentation(std::string_view name);

/// Tables for every name in bikei_names(), same order.
const std::vector<BikeiTable>& verified_bikeis();

}  // namespace bikei::fixtures
