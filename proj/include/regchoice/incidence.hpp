#pragma once

#include <span>
#include <string>
#include <string_view>
#include <optional>
#include <vector>

#include "regchoice/diagram.hpp"
#include "regchoice/gf2.hpp"
#include "regchoice/integer.hpp"

namespace regchoice {

/// single: a region adds its value once to every crossing on its boundary.
/// twice:  a region adds its value once per corner it has at the crossing.
enum class CountingRule { single, twice };

std::string_view rule_name(CountingRule rule) noexcept;  // "single" / "double"
std::optional<CountingRule> parse_rule(std::string_view text) noexcept;

using PointVector = IntVector;       // one entry per crossing
using RegionAssignment = IntVector;  // one entry per region

/// n x (n+2) matrix, rows = crossings, columns = regions.
struct RegionChoiceMatrix {
    CountingRule rule = CountingRule::single;
    IntMatrix entries;
    std::vector<std::string> row_labels;  // v1..vn
    std::vector<std::string> col_labels;  // r1..r(n+2)
};

RegionChoiceMatrix build_matrix(const FlatDiagram& d, CountingRule rule);

/// M u. Throws DimensionMismatch.
PointVector apply(const RegionChoiceMatrix& m, std::span<const Integer> u);
/// M u + b; zero certifies a solution. Throws DimensionMismatch.
PointVector residual(const RegionChoiceMatrix& m, std::span<const Integer> u,
                     std::span<const Integer> b);

/// For each region, the crossings it touches twice: the support of
/// column j of A_double - A_single.
std::vector<std::vector<std::size_t>> rule_gap_columns(const FlatDiagram& d);

/// Entrywise reduction mod 2 of a single-rule matrix. Throws
/// std::invalid_argument for a double-rule matrix.
Gf2Matrix mod2(const RegionChoiceMatrix& m);

} // namespace regchoice
