#pragma once

// Exhaustive search over a box of small assignments. Used by the tests to
// cross-check the lattice solvers; independent of zlinalg.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "regchoice/integer.hpp"
#include "regchoice/zlinalg.hpp"

namespace regchoice::oracle {

inline constexpr std::uint64_t default_budget = 10'000'000;

/// default_budget, or REGCHOICE_ORACLE_BUDGET when set.
std::uint64_t configured_budget();

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// u in [-radius, radius]^cols with matrix * u = target.
struct SearchBox {
    IntMatrix matrix;
    IntVector target;
    int radius = 0;
};

/// Every solution in the box, in lexicographic order.
std::vector<IntVector> brute_solutions(const SearchBox& box,
                                       std::uint64_t budget = configured_budget());

struct CrossCheckReport {
    bool pass = false;
    std::size_t brute_count = 0;
    std::size_t family_count = 0;  // family members inside the box
    std::vector<IntVector> not_in_family;
    std::vector<IntVector> not_found_by_search;
    std::string message;
};

/// Compares the solutions of A u + b = 0 inside the box with the members of
/// `family` that lie inside it.
CrossCheckReport cross_check(const IntMatrix& a, std::span<const Integer> b,
                             const SolutionFamily& family, int radius,
                             std::uint64_t budget = configured_budget());

} // namespace regchoice::oracle
