#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include "regchoice/diagram.hpp"
#include "regchoice/errors.hpp"

namespace regchoice {

namespace {

std::string crossing_name(std::size_t c) { return "v" + std::to_string(c + 1); }
std::string region_name(std::size_t r) { return "r" + std::to_string(r + 1); }

} // namespace

FlatDiagram FlatDiagram::from_crossings(std::vector<Crossing> crossings, std::string name) {
    const std::size_t n = crossings.size();
    if (n == 0) throw ValidationError("diagram has no crossings");

    std::map<ArcLabel, std::vector<std::size_t>> ends;
    for (std::size_t c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) ends[crossings[c][s]].push_back(dart_index(c, s));
    for (const auto& [label, darts] : ends)
        if (darts.size() == 1) throw ValidationError("unpaired arc label " + std::to_string(label));
    for (const auto& [label, darts] : ends)
        if (darts.size() > 2)
            throw ValidationError("arc label " + std::to_string(label) + " appears " +
                                  std::to_string(darts.size()) + " times");
    for (const auto& [label, darts] : ends)
        if (label < 1 || static_cast<std::size_t>(label) > 2 * n)
            throw ValidationError("arc label " + std::to_string(label) + " outside 1.." +
                                  std::to_string(2 * n));

    FlatDiagram d;
    d.name_ = std::move(name);
    d.crossings_ = std::move(crossings);
    d.mate_.assign(4 * n, 0);
    for (const auto& [label, darts] : ends) {
        d.mate_[darts[0]] = darts[1];
        d.mate_[darts[1]] = darts[0];
    }

    // Faces: orbits of d -> turn_clockwise(mate(d)), numbered by smallest dart.
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    d.face_of_dart_.assign(4 * n, unset);
    for (std::size_t start = 0; start < 4 * n; ++start) {
        if (d.face_of_dart_[start] != unset) continue;
        Region r;
        r.id = d.regions_.size();
        r.multiplicity.assign(n, 0);
        std::size_t x = start;
        do {
            d.face_of_dart_[x] = r.id;
            const Corner corner = dart_corner(x);
            r.corners.push_back(corner);
            ++r.multiplicity[corner.crossing];
            const std::size_t m = d.mate_[x];
            x = 4 * (m / 4) + (m % 4 + 3) % 4;
        } while (x != start);
        d.regions_.push_back(std::move(r));
    }

    // V - E + F = 2 on the sphere with V = n, E = 2n.
    if (d.regions_.size() != n + 2)
        throw ValidationError("non-spherical map: traced " + std::to_string(d.regions_.size()) +
                              " faces, a connected sphere embedding with " + std::to_string(n) +
                              " crossings has " + std::to_string(n + 2));
    for (const auto& r : d.regions_)
        for (std::size_t c = 0; c < n; ++c)
            if (r.multiplicity[c] > 2)
                throw ValidationError("region " + region_name(r.id) + " touches crossing " +
                                      crossing_name(c) + " " + std::to_string(r.multiplicity[c]) +
                                      " times");

    d.arcs_.reserve(2 * n);
    for (const auto& [label, darts] : ends) {
        Arc a;
        a.label = label;
        a.ends = {darts[0], darts[1]};
        a.sides = {d.face_of_dart_[darts[0]], d.face_of_dart_[darts[1]]};
        if (a.sides[0] == a.sides[1])
            throw ValidationError("arc " + std::to_string(label) + " has region " +
                                  region_name(a.sides[0]) + " on both sides");
        d.arcs_.push_back(a);
    }

    // Each component is walked once in each direction.
    std::vector<bool> seen(4 * n, false);
    std::size_t walks = 0;
    for (std::size_t start = 0; start < 4 * n; ++start) {
        if (seen[start]) continue;
        for (std::size_t x : d.strand_walk(start)) seen[x] = true;
        ++walks;
    }
    d.components_ = walks / 2;
    return d;
}

const Arc& FlatDiagram::arc(ArcLabel label) const {
    if (label < 1 || static_cast<std::size_t>(label) > arcs_.size())
        throw ValidationError("unknown arc " + std::to_string(label));
    return arcs_[static_cast<std::size_t>(label) - 1];
}

std::vector<std::size_t> FlatDiagram::strand_walk(std::size_t start) const {
    std::vector<std::size_t> out;
    std::size_t x = start;
    do {
        out.push_back(x);
        const std::size_t m = mate_[x];
        x = 4 * (m / 4) + (m % 4 + 2) % 4;
    } while (x != start);
    return out;
}

FlatDiagram FlatDiagram::with_region_order(std::span<const std::size_t> order) const {
    const std::size_t m = regions_.size();
    std::vector<std::size_t> new_id(m, m);
    if (order.size() != m) throw ValidationError("region order has the wrong length");
    for (std::size_t j = 0; j < m; ++j) {
        if (order[j] >= m || new_id[order[j]] != m)
            throw ValidationError("region order is not a permutation");
        new_id[order[j]] = j;
    }
    FlatDiagram d = *this;
    for (std::size_t j = 0; j < m; ++j) {
        d.regions_[j] = regions_[order[j]];
        d.regions_[j].id = j;
    }
    for (auto& f : d.face_of_dart_) f = new_id[f];
    for (auto& a : d.arcs_) a.sides = {new_id[a.sides[0]], new_id[a.sides[1]]};
    return d;
}

FlatDiagram FlatDiagram::with_name(std::string name) const {
    FlatDiagram d = *this;
    d.name_ = std::move(name);
    return d;
}

std::uint64_t FlatDiagram::fingerprint() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xFFU;
            h *= 1099511628211ULL;
        }
    };
    mix(crossings_.size());
    for (const auto& c : crossings_)
        for (ArcLabel a : c) mix(static_cast<std::uint64_t>(a));
    // Region numbering is part of the identity: matrices and assignments
    // refer to it.
    for (const auto& r : regions_) mix(dart_index(r.corners.front().crossing, r.corners.front().slot));
    return h;
}

int corner_count(const FlatDiagram& d, std::size_t region, std::size_t crossing) {
    return d.corner_count(region, crossing);
}

bool is_reducible(const FlatDiagram& d, std::size_t crossing) {
    if (crossing >= d.crossing_count()) throw ValidationError("unknown crossing");
    return std::any_of(d.regions().begin(), d.regions().end(),
                       [&](const Region& r) { return r.multiplicity[crossing] == 2; });
}

CheckerboardColoring checkerboard(const FlatDiagram& d) {
    const std::size_t m = d.region_count();
    std::vector<std::vector<std::size_t>> adj(m);
    for (const auto& a : d.arcs()) {
        adj[a.sides[0]].push_back(a.sides[1]);
        adj[a.sides[1]].push_back(a.sides[0]);
    }
    CheckerboardColoring col{std::vector<int>(m, 0)};
    std::deque<std::size_t> queue{0};
    col.sign[0] = 1;
    while (!queue.empty()) {
        const std::size_t r = queue.front();
        queue.pop_front();
        for (std::size_t s : adj[r]) {
            if (col.sign[s] == 0) {
                col.sign[s] = -col.sign[r];
                queue.push_back(s);
            } else if (col.sign[s] == col.sign[r]) {
                throw InvariantViolation("regions " + region_name(r) + " and " + region_name(s) +
                                         " share an arc and a colour");
            }
        }
    }
    if (std::find(col.sign.begin(), col.sign.end(), 0) != col.sign.end())
        throw InvariantViolation("region adjacency graph is disconnected");
    return col;
}

} // namespace regchoice
