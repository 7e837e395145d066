#include <map>

#include "regchoice/errors.hpp"
#include "regchoice/regionchoice.hpp"

namespace regchoice {

namespace {

void require_knot(const FlatDiagram& d, std::string_view what) {
    if (!d.is_knot())
        throw ValidationError(std::string(what) + " needs a knot projection, got " +
                              std::to_string(d.component_count()) + " components");
}

void require_crossing(const FlatDiagram& d, std::size_t v) {
    if (v >= d.crossing_count())
        throw ValidationError("crossing v" + std::to_string(v + 1) + " does not exist");
}

IntVector unit(std::size_t n, std::size_t i) {
    IntVector e(n);
    e[i] = 1;
    return e;
}

bool is_unit(std::span<const Integer> image, std::size_t v, int sign) {
    for (std::size_t i = 0; i < image.size(); ++i)
        if (image[i] != (i == v ? sign : 0)) return false;
    return true;
}

Add1Certificate certify(const FlatDiagram& d, CountingRule rule, std::size_t v, RegionAssignment u,
                        Add1Path path) {
    Add1Certificate cert{v, std::move(u), rule, path, {}, false};
    cert.image = multiply(build_matrix(d, rule).entries, cert.assignment);
    cert.verified = is_unit(cert.image, v, 1);
    if (!cert.verified)
        throw InvariantViolation("add-1 certificate at v" + std::to_string(v + 1) +
                                 " has image " + to_string(cert.image));
    return cert;
}

} // namespace

SolutionFamily solve(const FlatDiagram& d, CountingRule rule, std::span<const Integer> b) {
    require_knot(d, "solve");
    if (b.size() != d.crossing_count())
        throw ValidationError("b has " + std::to_string(b.size()) + " entries, expected " +
                              std::to_string(d.crossing_count()));
    const auto m = build_matrix(d, rule);
    const auto dec = reduce_to_e00(m.entries);
    if (!dec.is_e00)
        throw InvariantViolation(std::string(rule_name(rule)) +
                                 "-rule matrix is not equivalent to (I | 0 0)");
    SolutionFamily family = solve_integral(dec, b);
    if (!is_zero(residual(m, family.particular, b)) || !is_zero(multiply(m.entries, family.k1)) ||
        !is_zero(multiply(m.entries, family.k2)))
        throw InvariantViolation("solver produced a nonzero residual");
    return family;
}

RegionAssignment pinned_kernel(const IntMatrix& a, std::size_t r, std::size_t r2,
                               const Integer& value_r, const Integer& value_r2) {
    if (r >= a.cols() || r2 >= a.cols() || r == r2)
        throw ValidationError("pinned regions must be two distinct columns");
    const auto lattice = solve_diophantine(a, IntVector(a.rows()));
    if (!lattice) throw InvariantViolation("homogeneous system reported unsolvable");
    const auto& kernel = lattice->kernel;

    IntVector coeffs;
    if (kernel.size() == 2) {
        // Restriction of the basis to the two pinned coordinates.
        const Integer p = kernel[0][r], q = kernel[1][r];
        const Integer s = kernel[0][r2], t = kernel[1][r2];
        const Integer det = p * t - q * s;
        if (abs(det) != 1)
            throw InvariantViolation("kernel restriction to r" + std::to_string(r + 1) + ", r" +
                                     std::to_string(r2 + 1) + " has determinant " + det.get_str());
        coeffs = {det * (t * value_r - q * value_r2), det * (p * value_r2 - s * value_r)};
    } else {
        IntMatrix restriction(2, kernel.size());
        for (std::size_t j = 0; j < kernel.size(); ++j) {
            restriction(0, j) = kernel[j][r];
            restriction(1, j) = kernel[j][r2];
        }
        const IntVector pins = {value_r, value_r2};
        const auto c = solve_diophantine(restriction, pins);
        if (!c) throw InvariantViolation("no kernel vector takes the requested pin values");
        coeffs = c->particular;
    }
    RegionAssignment u(a.cols());
    for (std::size_t j = 0; j < kernel.size(); ++j)
        for (std::size_t i = 0; i < u.size(); ++i) u[i] += coeffs[j] * kernel[j][i];
    if (u[r] != value_r || u[r2] != value_r2 || !is_zero(multiply(a, u)))
        throw InvariantViolation("pinned kernel vector failed its own check");
    return u;
}

RegionAssignment pinned_kernel(const FlatDiagram& d, const PinnedKernelRequest& request) {
    if (request.rule == CountingRule::single) require_knot(d, "single-rule pinned kernel");
    const Arc& arc = d.arc(request.arc);
    return pinned_kernel(build_matrix(d, request.rule).entries, arc.sides[0], arc.sides[1],
                         request.a, request.b);
}

std::vector<ArcDeterminant> arc_unimodularity_report(const FlatDiagram& d, CountingRule rule) {
    require_knot(d, "arc unimodularity");
    const auto basis = kernel_basis(build_matrix(d, rule).entries);
    std::vector<ArcDeterminant> out;
    for (const auto& a : d.arcs()) {
        const auto [r, s] = a.sides;
        out.push_back({a.label, a.sides, abs(basis.k1[r] * basis.k2[s] - basis.k2[r] * basis.k1[s])});
    }
    return out;
}

std::string_view path_name(Add1Path path) noexcept {
    return path == Add1Path::algebraic ? "algebraic" : "geometric";
}

Add1Certificate add1_algebraic(const FlatDiagram& d, CountingRule rule, std::size_t crossing) {
    require_crossing(d, crossing);
    const IntVector b = negate(unit(d.crossing_count(), crossing));
    const auto family = solve(d, rule, b);
    return certify(d, rule, crossing, minimize_in_family(family, Norm::l2), Add1Path::algebraic);
}

Add1Certificate add1_geometric(const FlatDiagram& d, std::size_t crossing) {
    require_crossing(d, crossing);
    const ComponentSplit split = splice(d, crossing);
    const SplicedComponent& first = split.components[0];
    const SplicedComponent& second = split.components[1];

    // Component 0 alone: 0 on the channel side of its smoothed arc, 1 across.
    const std::size_t channel = first.region_map[d.region_of(Corner{crossing, split.channel_corners[0]})];
    const std::size_t outer = first.region_map[d.region_of(Corner{crossing, split.outer_corner[0]})];
    RegionAssignment base(first.region_count);
    if (first.diagram) {
        base = pinned_kernel(build_matrix(*first.diagram, CountingRule::twice).entries, channel, outer,
                             Integer(0), Integer(1));
    } else {
        base[outer] = 1;
    }

    // Checkerboard signs of component 1 alone.
    std::vector<int> sign(second.region_count);
    if (second.diagram) sign = checkerboard(*second.diagram).sign;
    else sign = {1, -1};

    RegionAssignment u(d.region_count());
    for (std::size_t r = 0; r < u.size(); ++r)
        u[r] = sign[second.region_map[r]] * base[first.region_map[r]];

    const IntVector image = multiply(build_matrix(d, CountingRule::twice).entries, u);
    if (is_unit(image, crossing, -1)) u = negate(u);
    else if (!is_unit(image, crossing, 1))
        throw InvariantViolation("geometric add-1 at v" + std::to_string(crossing + 1) +
                                 " produced " + to_string(image));
    return certify(d, CountingRule::twice, crossing, std::move(u), Add1Path::geometric);
}

RegionAssignment solve_single_via_double(const FlatDiagram& d, std::span<const Integer> b) {
    RegionAssignment u = solve(d, CountingRule::twice, b).particular;
    RegionAssignment corrected = u;
    std::map<std::size_t, RegionAssignment> add1_cache;
    const auto gaps = rule_gap_columns(d);
    for (std::size_t j = 0; j < gaps.size(); ++j) {
        if (sgn(u[j]) == 0) continue;
        for (std::size_t v : gaps[j]) {
            auto it = add1_cache.find(v);
            if (it == add1_cache.end())
                it = add1_cache.emplace(v, add1_algebraic(d, CountingRule::single, v).assignment).first;
            for (std::size_t r = 0; r < corrected.size(); ++r) corrected[r] += u[j] * it->second[r];
        }
    }
    if (!is_zero(residual(build_matrix(d, CountingRule::single), corrected, b)))
        throw InvariantViolation("corrected single-rule solution has a nonzero residual");
    return corrected;
}

std::vector<std::size_t> solve_mod2(const FlatDiagram& d, std::span<const std::uint8_t> b) {
    require_knot(d, "mod 2 solve");
    if (b.size() != d.crossing_count())
        throw ValidationError("b has " + std::to_string(b.size()) + " entries, expected " +
                              std::to_string(d.crossing_count()));
    for (auto bit : b)
        if (bit > 1) throw ValidationError("mod 2 right-hand side must be 0/1");
    const auto solution = solve_gf2(mod2(build_matrix(d, CountingRule::single)), b);
    if (!solution) throw InvariantViolation("mod 2 region choice problem reported unsolvable");
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < solution->size(); ++j)
        if ((*solution)[j]) chosen.push_back(j);
    return chosen;
}

VerificationReport verify(const FlatDiagram& d, CountingRule rule, std::span<const Integer> u,
                          std::span<const Integer> b) {
    const auto m = build_matrix(d, rule);
    if (u.size() != d.region_count())
        throw DimensionMismatch("u has " + std::to_string(u.size()) + " entries, expected " +
                                std::to_string(d.region_count()));
    VerificationReport report;
    const PointVector added = apply(m, u);
    report.residual = residual(m, u, b);
    report.pass = is_zero(report.residual);
    for (std::size_t i = 0; i < added.size(); ++i)
        report.crossings.push_back({i, b[i], added[i], report.residual[i]});
    return report;
}

} // namespace regchoice
