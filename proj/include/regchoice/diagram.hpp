#pragma once

// Flat knot/link projections as 4-valent combinatorial maps on the sphere.
//
// A crossing is four dart slots in counterclockwise order; dart (c, s) has
// index 4c + s. A strand entering at slot s leaves at slot s + 2 (mod 4).
// Faces are the orbits of "follow the arc to its other end, then turn one
// slot clockwise" (s -> s - 1). Under that rule dart (c, s) also names the
// corner (wedge) of crossing c between slots s and s + 1, and the face
// containing it lies to the left of the arc leaving c through slot s.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace regchoice {

using ArcLabel = int;

struct Corner {
    std::size_t crossing = 0;
    int slot = 0;  // wedge between `slot` and `slot + 1`

    friend bool operator==(const Corner&, const Corner&) = default;
};

constexpr std::size_t dart_index(std::size_t crossing, int slot) noexcept {
    return 4 * crossing + static_cast<std::size_t>(slot);
}
constexpr Corner dart_corner(std::size_t dart) noexcept {
    return {dart / 4, static_cast<int>(dart % 4)};
}

/// A face of the projection.
struct Region {
    std::size_t id = 0;
    /// Corners in face-tracing order, starting at the smallest dart.
    std::vector<Corner> corners;
    /// Corner count at each crossing (0, 1 or 2).
    std::vector<int> multiplicity;
};

/// Edge between two consecutive crossing passes.
struct Arc {
    ArcLabel label = 0;
    std::array<std::size_t, 2> ends{};   // darts, ends[0] < ends[1]
    std::array<std::size_t, 2> sides{};  // sides[k]: region left of the arc leaving ends[k]
};

class FlatDiagram {
public:
    using Crossing = std::array<ArcLabel, 4>;

    /// Validates and traces faces. Throws ValidationError on unpaired or
    /// repeated labels, labels outside 1..2n, a non-spherical map, or a
    /// region touching one crossing more than twice.
    static FlatDiagram from_crossings(std::vector<Crossing> crossings, std::string name = {});

    std::size_t crossing_count() const noexcept { return crossings_.size(); }
    std::size_t region_count() const noexcept { return regions_.size(); }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    std::size_t component_count() const noexcept { return components_; }
    bool is_knot() const noexcept { return components_ == 1; }

    const std::string& name() const noexcept { return name_; }
    const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
    const std::vector<Region>& regions() const noexcept { return regions_; }
    const Region& region(std::size_t id) const { return regions_.at(id); }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    /// Throws ValidationError for an unknown label.
    const Arc& arc(ArcLabel label) const;

    ArcLabel label_at(std::size_t dart) const { return crossings_[dart / 4][dart % 4]; }
    std::size_t mate(std::size_t dart) const { return mate_[dart]; }
    std::size_t region_of(std::size_t dart) const { return face_of_dart_[dart]; }
    std::size_t region_of(Corner c) const { return face_of_dart_[dart_index(c.crossing, c.slot)]; }

    int corner_count(std::size_t region, std::size_t crossing) const {
        return regions_.at(region).multiplicity.at(crossing);
    }

    /// Outgoing darts met while walking a strand from `start` until it
    /// closes up. The walk leaves through `start` first.
    std::vector<std::size_t> strand_walk(std::size_t start) const;

    /// Same diagram with regions renumbered: new region j is old region
    /// order[j].
    FlatDiagram with_region_order(std::span<const std::size_t> order) const;
    FlatDiagram with_name(std::string name) const;

    /// Stable 64-bit FNV-1a hash of the crossing list.
    std::uint64_t fingerprint() const;

private:
    FlatDiagram() = default;

    std::string name_;
    std::vector<Crossing> crossings_;
    std::vector<std::size_t> mate_;
    std::vector<std::size_t> face_of_dart_;
    std::vector<Region> regions_;
    std::vector<Arc> arcs_;  // arcs_[label - 1]
    std::size_t components_ = 0;
};

int corner_count(const FlatDiagram& d, std::size_t region, std::size_t crossing);

/// Some region touches the crossing twice (a nugatory crossing).
bool is_reducible(const FlatDiagram& d, std::size_t crossing);

/// Proper 2-colouring of the regions across arcs; region 0 is +1.
struct CheckerboardColoring {
    std::vector<int> sign;
};
CheckerboardColoring checkerboard(const FlatDiagram& d);

/// One curve component after an oriented splice, viewed with the other
/// component erased.
struct SplicedComponent {
    /// nullopt when the component has no self-crossings (a bare loop).
    std::optional<FlatDiagram> diagram;
    /// Original indices of the self-crossings; entry i is crossing i of
    /// `diagram`, with the same slot order.
    std::vector<std::size_t> crossings;
    /// Original arc labels lying on this component.
    std::vector<ArcLabel> arcs;
    /// Original region -> region of this component alone.
    std::vector<std::size_t> region_map;
    std::size_t region_count = 0;
};

/// Oriented smoothing of a knot projection at one crossing. The orientation
/// is the one obtained by leaving dart 0 first. Component 0 is the one that
/// carries the first strand arriving at the crossing.
struct ComponentSplit {
    std::size_t crossing = 0;
    std::array<SplicedComponent, 2> components;
    /// Crossings where the two components meet.
    std::vector<std::size_t> mixed_crossings;
    /// Slot of the corner at the smoothed crossing bounded only by
    /// component k's smoothed arc.
    std::array<int, 2> outer_corner{};
    /// The two corners that merge into one region after smoothing.
    std::array<int, 2> channel_corners{};
};

/// Throws ValidationError when the diagram has more than one component.
ComponentSplit splice(const FlatDiagram& d, std::size_t crossing);

} // namespace regchoice
