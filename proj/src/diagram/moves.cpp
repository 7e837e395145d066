#include <algorithm>
#include <map>
#include <random>

#include "regchoice/errors.hpp"
#include "regchoice/moves.hpp"

namespace regchoice {

namespace {

using Crossings = std::vector<FlatDiagram::Crossing>;

// Renumbers labels 1..2n by first appearance, then validates.
FlatDiagram rebuild(Crossings cs, std::string name) {
    std::map<ArcLabel, ArcLabel> renumber;
    for (auto& c : cs)
        for (auto& a : c) {
            auto [it, _] = renumber.emplace(a, static_cast<ArcLabel>(renumber.size() + 1));
            a = it->second;
        }
    return FlatDiagram::from_crossings(std::move(cs), std::move(name));
}

ArcLabel fresh_label(const FlatDiagram& d) { return static_cast<ArcLabel>(2 * d.crossing_count() + 1); }

void set_label(Crossings& cs, std::size_t dart, ArcLabel label) { cs[dart / 4][dart % 4] = label; }

// Old regions keep at least one corner at an old crossing; follow it.
std::vector<std::size_t> map_regions(const FlatDiagram& before, const FlatDiagram& after) {
    std::vector<std::size_t> out;
    for (const auto& r : before.regions()) out.push_back(after.region_of(r.corners.front()));
    return out;
}

std::string derived_name(const FlatDiagram& d, const char* move) {
    return d.name().empty() ? std::string{} : d.name() + "+" + move;
}

} // namespace

R1Result reidemeister1(const FlatDiagram& d, ArcLabel label, KinkSide side) {
    const Arc& arc = d.arc(label);
    Crossings cs = d.crossings();
    const ArcLabel loop = fresh_label(d), tail = loop + 1;
    const std::size_t x = cs.size();

    // The strand enters the kink at slot 2 from ends[0] and leaves towards
    // ends[1]. With the loop on slots 0,1 it lies left of the walk.
    set_label(cs, arc.ends[1], tail);
    const bool left = side == KinkSide::left;
    cs.push_back(left ? FlatDiagram::Crossing{loop, loop, label, tail}
                      : FlatDiagram::Crossing{loop, tail, label, loop});

    R1Result res{rebuild(std::move(cs), derived_name(d, "R1")), 0, 0, 0, 0, {}};
    res.crossing = x;
    res.region_map = map_regions(d, res.diagram);
    res.petal = res.diagram.region_of(Corner{x, left ? 0 : 3});
    res.doubled_region = res.region_map[arc.sides[left ? 0 : 1]];
    res.single_region = res.region_map[arc.sides[left ? 1 : 0]];
    if (res.diagram.corner_count(res.doubled_region, x) != 2)
        throw InvariantViolation("kink placed on the wrong side");
    return res;
}

FlatDiagram apply_r1(const FlatDiagram& d, ArcLabel arc, KinkSide side) {
    return reidemeister1(d, arc, side).diagram;
}

R2Result reidemeister2_in_region(const FlatDiagram& d, ArcLabel label1, ArcLabel label2,
                                 std::size_t region) {
    if (label1 == label2) throw ValidationError("Reidemeister II needs two different arcs");
    const Arc& a1 = d.arc(label1);
    const Arc& a2 = d.arc(label2);
    auto entry = [&](const Arc& a) -> std::size_t {
        if (a.sides[0] == region) return a.ends[0];
        if (a.sides[1] == region) return a.ends[1];
        throw ValidationError("arc " + std::to_string(a.label) + " does not border region r" +
                              std::to_string(region + 1));
    };
    // Walk both arcs with the region on the left: p -> q.
    const std::size_t p1 = entry(a1), q1 = d.mate(p1);
    const std::size_t p2 = entry(a2), q2 = d.mate(p2);

    Crossings cs = d.crossings();
    const std::size_t x = cs.size(), y = x + 1;
    const ArcLabel top = fresh_label(d), after1 = top + 1, middle = top + 2, after2 = top + 3;
    set_label(cs, q1, after1);
    set_label(cs, q2, after2);
    // Arc 1 runs p1 -> x(3) -> x(1) -> y(1) -> y(3) -> q1,
    // arc 2 runs p2 -> y(0) -> y(2) -> x(0) -> x(2) -> q2.
    cs.push_back({middle, top, after2, label1});
    cs.push_back({label2, top, middle, after1});

    R2Result res{rebuild(std::move(cs), derived_name(d, "R2")), 0, 0, 0, 0, {}, {}};
    res.split_region = region;
    res.crossings = {x, y};
    res.part_one = res.diagram.region_of(Corner{x, 2});
    res.part_two = res.diagram.region_of(Corner{y, 3});
    res.bigon = res.diagram.region_of(Corner{x, 0});
    res.region_map = map_regions(d, res.diagram);
    res.region_map[region] = res.part_one;
    return res;
}

R2Result reidemeister2(const FlatDiagram& d, ArcLabel label1, ArcLabel label2) {
    const Arc& a1 = d.arc(label1);
    const Arc& a2 = d.arc(label2);
    std::vector<std::size_t> shared;
    for (std::size_t r : a1.sides)
        if (r == a2.sides[0] || r == a2.sides[1]) shared.push_back(r);
    if (shared.empty())
        throw ValidationError("arcs " + std::to_string(label1) + " and " + std::to_string(label2) +
                              " share no region");
    return reidemeister2_in_region(d, label1, label2, *std::min_element(shared.begin(), shared.end()));
}

FlatDiagram apply_r2(const FlatDiagram& d, ArcLabel arc1, ArcLabel arc2) {
    return reidemeister2(d, arc1, arc2).diagram;
}

FlatDiagram random_diagram(std::uint64_t seed, std::size_t moves) {
    std::mt19937_64 rng(seed);
    // Plain modulo keeps the sequence identical across standard libraries.
    auto below = [&rng](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };

    FlatDiagram d = FlatDiagram::from_crossings({{1, 2, 2, 1}});
    for (std::size_t step = 0; step < moves; ++step) {
        if (below(2) == 0) {
            const auto label = static_cast<ArcLabel>(1 + below(d.arc_count()));
            d = apply_r1(d, label, below(2) == 0 ? KinkSide::left : KinkSide::right);
            continue;
        }
        std::vector<std::size_t> candidates;
        for (const auto& r : d.regions())
            if (r.corners.size() >= 2) candidates.push_back(r.id);
        const Region& r = d.region(candidates[below(candidates.size())]);
        const std::size_t i = below(r.corners.size());
        std::size_t j = below(r.corners.size() - 1);
        if (j >= i) ++j;
        // Corner k of the face is also the dart whose arc leaves with the
        // face on its left.
        const ArcLabel l1 = d.label_at(dart_index(r.corners[i].crossing, r.corners[i].slot));
        const ArcLabel l2 = d.label_at(dart_index(r.corners[j].crossing, r.corners[j].slot));
        d = reidemeister2_in_region(d, l1, l2, r.id).diagram;
    }
    return d.with_name("random-" + std::to_string(seed) + "-" + std::to_string(moves));
}

} // namespace regchoice
