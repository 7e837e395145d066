#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "regchoice/diagram.hpp"

namespace regchoice {

/// Which side of an arc receives the kink loop, relative to walking the arc
/// from its smaller dart (ends[0]); `left` puts it inside arc.sides[0].
enum class KinkSide { left, right };

struct R1Result {
    FlatDiagram diagram;
    std::size_t crossing = 0;         // the new kink crossing
    std::size_t petal = 0;            // the new monogon
    std::size_t doubled_region = 0;   // touches the kink twice
    std::size_t single_region = 0;    // other side of the arc
    std::vector<std::size_t> region_map;  // old region -> new region
};

struct R2Result {
    FlatDiagram diagram;
    std::size_t split_region = 0;      // old region the finger went through
    std::size_t part_one = 0;          // its two pieces afterwards
    std::size_t part_two = 0;
    std::size_t bigon = 0;
    std::array<std::size_t, 2> crossings{};
    /// Old region -> new region; split_region maps to part_one.
    std::vector<std::size_t> region_map;
};

/// Reidemeister I: add a kink on `arc`. Crossings +1, regions +1.
R1Result reidemeister1(const FlatDiagram& d, ArcLabel arc, KinkSide side);
FlatDiagram apply_r1(const FlatDiagram& d, ArcLabel arc, KinkSide side);

/// Reidemeister II: push a finger of arc1 across arc2 through a region both
/// border. With several shared regions the smallest id is used. Throws
/// ValidationError when the arcs share no region or coincide.
R2Result reidemeister2(const FlatDiagram& d, ArcLabel arc1, ArcLabel arc2);
R2Result reidemeister2_in_region(const FlatDiagram& d, ArcLabel arc1, ArcLabel arc2,
                                 std::size_t region);
FlatDiagram apply_r2(const FlatDiagram& d, ArcLabel arc1, ArcLabel arc2);

/// Start at the one-crossing kink and apply `moves` seeded random R1/R2
/// insertions. Deterministic for a given (seed, moves).
FlatDiagram random_diagram(std::uint64_t seed, std::size_t moves);

} // namespace regchoice
