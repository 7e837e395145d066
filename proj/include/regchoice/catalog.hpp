#pragma once

#include <span>
#include <string_view>

#include "regchoice/diagram.hpp"

namespace regchoice {

/// d0, example2_4, 3_1, 4_1, 5_1, 5_2, 6_1, 6_2, 6_3.
std::span<const std::string_view> catalog_names() noexcept;

/// Catalog diagram with crossings and regions numbered like the reference
/// tables. Throws ValidationError for an unknown name.
FlatDiagram catalog(std::string_view name);

} // namespace regchoice
