#pragma once

// Solvers for the integral region choice problem A u + b = 0 on knot
// projections, for both counting rules, plus the add-1 constructions and
// pinned kernel solutions they are built from.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "regchoice/diagram.hpp"
#include "regchoice/incidence.hpp"
#include "regchoice/zlinalg.hpp"

namespace regchoice {

/// All u with A_rule u + b = 0. The residual of the particular solution is
/// checked before returning. Throws ValidationError for links or a wrong
/// b length, InvariantViolation if the matrix is not E00.
SolutionFamily solve(const FlatDiagram& d, CountingRule rule, std::span<const Integer> b);

struct PinnedKernelRequest {
    ArcLabel arc = 0;
    Integer a = 0;  // value on arc.sides[0]
    Integer b = 0;  // value on arc.sides[1]
    CountingRule rule = CountingRule::twice;
};

/// Kernel solution taking the requested values on the two sides of the arc.
/// Links are accepted for the double rule only.
RegionAssignment pinned_kernel(const FlatDiagram& d, const PinnedKernelRequest& request);

/// Same construction on a bare matrix: a kernel vector with u[r] = a and
/// u[r2] = b. Throws InvariantViolation when no such vector exists.
RegionAssignment pinned_kernel(const IntMatrix& a, std::size_t r, std::size_t r2,
                               const Integer& value_r, const Integer& value_r2);

struct ArcDeterminant {
    ArcLabel arc = 0;
    std::array<std::size_t, 2> sides{};
    Integer det;  // |det| of the kernel basis restricted to the two sides
};
std::vector<ArcDeterminant> arc_unimodularity_report(const FlatDiagram& d, CountingRule rule);

enum class Add1Path { algebraic, geometric };
std::string_view path_name(Add1Path path) noexcept;

/// u with A_rule u = e_v.
struct Add1Certificate {
    std::size_t crossing = 0;
    RegionAssignment assignment;
    CountingRule rule = CountingRule::twice;
    Add1Path path = Add1Path::algebraic;
    PointVector image;  // A_rule * assignment, recomputed
    bool verified = false;
};

Add1Certificate add1_algebraic(const FlatDiagram& d, CountingRule rule, std::size_t crossing);

/// Splice at the crossing, pin a kernel solution of component 0 to (0, 1)
/// across its smoothed arc, multiply by the checkerboard signs of
/// component 1 and fix the global sign. Double rule, knots only.
Add1Certificate add1_geometric(const FlatDiagram& d, std::size_t crossing);

/// Single-rule solution assembled from a double-rule one plus add-1
/// corrections at every doubly touched (region, crossing) pair.
RegionAssignment solve_single_via_double(const FlatDiagram& d, std::span<const Integer> b);

/// Regions to choose so that the single-rule points all become even,
/// i.e. sum of chosen A_single columns = b (mod 2).
std::vector<std::size_t> solve_mod2(const FlatDiagram& d, std::span<const std::uint8_t> b);

struct CrossingBreakdown {
    std::size_t crossing = 0;
    Integer initial;   // b_i
    Integer added;     // (A u)_i
    Integer result;    // b_i + (A u)_i
};

struct VerificationReport {
    bool pass = false;
    PointVector residual;
    std::vector<CrossingBreakdown> crossings;
};
VerificationReport verify(const FlatDiagram& d, CountingRule rule, std::span<const Integer> u,
                          std::span<const Integer> b);

} // namespace regchoice
