#include <algorithm>
#include <map>
#include <numeric>

#include "regchoice/diagram.hpp"
#include "regchoice/errors.hpp"

namespace regchoice {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

int wrap(int s) { return ((s % 4) + 4) % 4; }

// Corner (wedge) between two adjacent slots.
int wedge_between(int s, int t) { return wrap(t - s) == 1 ? s : t; }

struct SpliceContext {
    const FlatDiagram& d;
    std::size_t v;
    std::array<int, 4> partner{};            // smoothing continuation at v
    std::vector<int> arc_component;          // by label - 1
    std::vector<std::array<int, 2>> hits;    // per crossing, strand passes per component
};

// Walks one smoothed component from an outgoing dart at v until it comes
// back to v, recording arcs and crossing passes. Returns the arrival slot.
int walk_component(SpliceContext& ctx, int out_slot, int component) {
    std::size_t x = dart_index(ctx.v, out_slot);
    for (;;) {
        ctx.arc_component[static_cast<std::size_t>(ctx.d.label_at(x)) - 1] = component;
        const std::size_t m = ctx.d.mate(x);
        const std::size_t c = m / 4;
        if (c == ctx.v) return static_cast<int>(m % 4);
        ++ctx.hits[c][component];
        x = dart_index(c, wrap(static_cast<int>(m % 4) + 2));
    }
}

SplicedComponent extract(const SpliceContext& ctx, int k) {
    const FlatDiagram& d = ctx.d;
    const std::size_t n = d.crossing_count();
    SplicedComponent out;

    std::vector<std::size_t> sub_index(n, n);
    for (std::size_t c = 0; c < n; ++c)
        if (c != ctx.v && ctx.hits[c][k] == 2) {
            sub_index[c] = out.crossings.size();
            out.crossings.push_back(c);
        }
    for (const auto& a : d.arcs())
        if (ctx.arc_component[static_cast<std::size_t>(a.label) - 1] == k) out.arcs.push_back(a.label);

    // Erasing the other component merges the regions on both sides of each
    // of its arcs.
    UnionFind uf(d.region_count());
    for (const auto& a : d.arcs())
        if (ctx.arc_component[static_cast<std::size_t>(a.label) - 1] != k) uf.unite(a.sides[0], a.sides[1]);
    std::map<std::size_t, std::size_t> class_index;
    std::vector<std::size_t> class_of(d.region_count());
    for (std::size_t r = 0; r < d.region_count(); ++r) {
        auto [it, _] = class_index.emplace(uf.find(r), class_index.size());
        class_of[r] = it->second;
    }
    out.region_count = class_index.size();
    if (out.region_count != out.crossings.size() + 2)
        throw InvariantViolation("spliced component has " + std::to_string(out.region_count) +
                                 " regions for " + std::to_string(out.crossings.size()) +
                                 " self-crossings");

    if (out.crossings.empty()) {
        out.region_map = class_of;
        return out;
    }

    // Reconnect the strand through mixed crossings (straight on) and through
    // v (along the smoothing).
    const std::size_t sn = out.crossings.size();
    std::vector<std::size_t> sub_mate(4 * sn, 4 * sn);
    for (std::size_t i = 0; i < sn; ++i)
        for (int s = 0; s < 4; ++s) {
            std::size_t x = dart_index(out.crossings[i], s);
            for (;;) {
                const std::size_t m = d.mate(x);
                const std::size_t c = m / 4;
                const int slot = static_cast<int>(m % 4);
                if (sub_index[c] != n) {
                    sub_mate[dart_index(i, s)] = dart_index(sub_index[c], slot);
                    break;
                }
                x = dart_index(c, c == ctx.v ? ctx.partner[static_cast<std::size_t>(slot)] : wrap(slot + 2));
            }
        }
    std::vector<FlatDiagram::Crossing> sub(sn);
    std::vector<ArcLabel> label(4 * sn, 0);
    ArcLabel next = 1;
    for (std::size_t x = 0; x < 4 * sn; ++x) {
        if (label[x] == 0) label[x] = label[sub_mate[x]] = next++;
        sub[x / 4][x % 4] = label[x];
    }
    out.diagram = FlatDiagram::from_crossings(std::move(sub));

    // Match region classes with the faces traced on the component alone.
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> class_face(out.region_count, unset);
    for (const auto& r : d.regions())
        for (const auto& corner : r.corners) {
            if (sub_index[corner.crossing] == n) continue;
            const std::size_t f = out.diagram->region_of(Corner{sub_index[corner.crossing], corner.slot});
            std::size_t& slot = class_face[class_of[r.id]];
            if (slot == unset) slot = f;
            else if (slot != f) throw InvariantViolation("region classes disagree with traced faces");
        }
    std::vector<bool> used(out.region_count, false);
    for (std::size_t f : class_face) {
        if (f == unset || used[f]) throw InvariantViolation("region classes disagree with traced faces");
        used[f] = true;
    }
    out.region_map.resize(d.region_count());
    for (std::size_t r = 0; r < d.region_count(); ++r) out.region_map[r] = class_face[class_of[r]];
    return out;
}

} // namespace

ComponentSplit splice(const FlatDiagram& d, std::size_t crossing) {
    if (crossing >= d.crossing_count()) throw ValidationError("unknown crossing");
    if (!d.is_knot()) throw ValidationError("splice needs a knot projection (one component)");

    // Arrival slots at the crossing, in the order met when leaving dart 0.
    std::vector<int> arrivals;
    for (std::size_t x : d.strand_walk(0)) {
        const std::size_t m = d.mate(x);
        if (m / 4 == crossing) arrivals.push_back(static_cast<int>(m % 4));
    }
    if (arrivals.size() != 2) throw InvariantViolation("knot does not pass the crossing twice");
    const int in_a = arrivals[0], in_b = arrivals[1];

    SpliceContext ctx{d, crossing, {}, std::vector<int>(d.arc_count(), -1),
                      std::vector<std::array<int, 2>>(d.crossing_count(), {0, 0})};
    // Oriented smoothing: in_a continues out along b, in_b out along a.
    const int out_a = wrap(in_a + 2), out_b = wrap(in_b + 2);
    ctx.partner[in_a] = out_b;
    ctx.partner[out_b] = in_a;
    ctx.partner[in_b] = out_a;
    ctx.partner[out_a] = in_b;

    // Component 0 carries in_a (it leaves through out_b); component 1 leaves
    // through out_a and returns through in_b.
    if (walk_component(ctx, out_b, 0) != in_a || walk_component(ctx, out_a, 1) != in_b)
        throw InvariantViolation("smoothing did not close both components");

    ComponentSplit split;
    split.crossing = crossing;
    for (std::size_t c = 0; c < d.crossing_count(); ++c)
        if (c != crossing && ctx.hits[c][0] == 1 && ctx.hits[c][1] == 1) split.mixed_crossings.push_back(c);
    split.outer_corner = {wedge_between(in_a, out_b), wedge_between(in_b, out_a)};
    std::size_t k = 0;
    for (int w = 0; w < 4; ++w)
        if (w != split.outer_corner[0] && w != split.outer_corner[1]) split.channel_corners[k++] = w;
    split.components = {extract(ctx, 0), extract(ctx, 1)};
    return split;
}

} // namespace regchoice
