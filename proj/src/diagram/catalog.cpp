#include <array>
#include <vector>

#include "regchoice/catalog.hpp"
#include "regchoice/errors.hpp"

namespace regchoice {

namespace {

struct Entry {
    std::string_view name;
    std::vector<FlatDiagram::Crossing> crossings;
    // Printed column j is traced region column_order[j].
    std::vector<std::size_t> column_order;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = {
        {"d0", {{1, 2, 2, 1}}, {0, 1, 2}},
        {"example2_4", {{1, 8, 7, 7}, {1, 5, 2, 4}, {3, 8, 4, 6}, {5, 3, 6, 2}}, {2, 1, 0, 3, 4, 5}},
        {"3_1", {{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}}, {0, 3, 1, 2, 4}},
        {"4_1", {{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}}, {0, 3, 2, 1, 4, 5}},
        {"5_1",
         {{1, 6, 2, 7}, {5, 10, 6, 1}, {7, 2, 8, 3}, {9, 4, 10, 5}, {3, 8, 4, 9}},
         {1, 0, 2, 4, 5, 6, 3}},
        {"5_2",
         {{1, 4, 2, 5}, {3, 8, 4, 9}, {7, 2, 8, 3}, {5, 10, 6, 1}, {9, 6, 10, 7}},
         {0, 1, 3, 4, 5, 2, 6}},
        {"6_1",
         {{1, 4, 2, 5}, {5, 12, 6, 1}, {3, 9, 4, 8}, {9, 3, 10, 2}, {11, 6, 12, 7}, {7, 10, 8, 11}},
         {0, 1, 3, 5, 6, 4, 2, 7}},
        {"6_2",
         {{5, 10, 6, 11}, {9, 3, 10, 2}, {1, 4, 2, 5}, {11, 6, 12, 7}, {3, 9, 4, 8}, {7, 12, 8, 1}},
         {1, 0, 2, 4, 5, 6, 3, 7}},
        {"6_3",
         {{4, 2, 5, 1}, {10, 5, 11, 6}, {12, 9, 1, 10}, {8, 4, 9, 3}, {6, 11, 7, 12}, {2, 8, 3, 7}},
         {1, 2, 0, 3, 5, 4, 7, 6}},
    };
    return table;
}

constexpr std::array<std::string_view, 9> names = {"d0",  "example2_4", "3_1", "4_1", "5_1",
                                                   "5_2", "6_1",        "6_2", "6_3"};

} // namespace

std::span<const std::string_view> catalog_names() noexcept { return names; }

FlatDiagram catalog(std::string_view name) {
    for (const auto& e : entries())
        if (e.name == name)
            return FlatDiagram::from_crossings(e.crossings, std::string(name))
                .with_region_order(e.column_order);
    throw ValidationError("unknown catalog diagram '" + std::string(name) + "'");
}

} // namespace regchoice
