#include <algorithm>
#include <charconv>
#include <climits>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <set>

#include "regchoice/errors.hpp"
#include "regchoice/oracle.hpp"
#include "regchoice/simd/kernels.hpp"

namespace regchoice::oracle {

namespace {

constexpr long int32_limit = std::numeric_limits<std::int32_t>::max();

std::uint64_t box_size(std::size_t cols, int radius, std::uint64_t budget) {
    const std::uint64_t side = 2 * static_cast<std::uint64_t>(radius) + 1;
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < cols; ++j) {
        if (total > budget / side) throw BudgetExceeded("search box exceeds the oracle budget");
        total *= side;
    }
    return total;
}

bool in_box(std::span<const Integer> u, int radius) {
    return std::all_of(u.begin(), u.end(), [radius](const Integer& x) { return abs(x) <= radius; });
}

} // namespace

std::uint64_t configured_budget() {
    const char* env = std::getenv("REGCHOICE_ORACLE_BUDGET");
    if (env == nullptr || *env == '\0') return default_budget;
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec != std::errc{} || *end != '\0')
        throw ValidationError("REGCHOICE_ORACLE_BUDGET is not a nonnegative integer");
    return value;
}

std::vector<IntVector> brute_solutions(const SearchBox& box, std::uint64_t budget) {
    const std::size_t rows = box.matrix.rows(), cols = box.matrix.cols();
    if (box.target.size() != rows) throw DimensionMismatch("target length differs from row count");
    if (box.radius < 0) throw std::invalid_argument("negative search radius");
    const std::uint64_t total = box_size(cols, box.radius, budget);

    // Every partial sum is bounded by max|a| * radius * cols.
    std::vector<std::int32_t> a(rows * cols);
    long max_entry = 0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const Integer& x = box.matrix(i, j);
            if (!x.fits_sint_p() || abs(x) > int32_limit)
                throw std::invalid_argument("matrix entry too large for the oracle");
            a[i * cols + j] = static_cast<std::int32_t>(x.get_si());
            max_entry = std::max(max_entry, std::labs(x.get_si()));
        }
    if (max_entry > 0 && static_cast<long double>(max_entry) * box.radius * static_cast<long double>(cols) >
                             static_cast<long double>(int32_limit))
        throw std::invalid_argument("search box too large for 32-bit accumulation");
    std::vector<std::int32_t> target(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        // Out-of-range targets cannot be hit by any vector in the box.
        if (abs(box.target[i]) > int32_limit) return {};
        target[i] = static_cast<std::int32_t>(box.target[i].get_si());
    }

    std::vector<IntVector> found;
    std::vector<std::int32_t> u(cols, -box.radius), image(rows);
    for (std::uint64_t step = 0; step < total; ++step) {
        simd::matvec_i32(a, rows, cols, u, image);
        if (image == target) {
            IntVector hit(cols);
            for (std::size_t j = 0; j < cols; ++j) hit[j] = u[j];
            found.push_back(std::move(hit));
        }
        // Odometer with the last coordinate fastest: lexicographic order.
        for (std::size_t j = cols; j-- > 0;) {
            if (u[j] < box.radius) {
                ++u[j];
                break;
            }
            u[j] = -box.radius;
        }
    }
    return found;
}

CrossCheckReport cross_check(const IntMatrix& a, std::span<const Integer> b,
                             const SolutionFamily& family, int radius, std::uint64_t budget) {
    const std::size_t m = a.cols();
    if (family.particular.size() != m || family.k1.size() != m || family.k2.size() != m)
        throw DimensionMismatch("family vectors do not match the column count");

    CrossCheckReport report;
    const auto brute = brute_solutions({a, negate(b), radius}, budget);
    report.brute_count = brute.size();

    // A family member is fixed by two coordinates where the kernel basis is
    // independent; enumerate those two coordinates over the box.
    std::size_t ci = m, cj = m;
    Integer det;
    for (std::size_t i = 0; i < m && ci == m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            det = family.k1[i] * family.k2[j] - family.k2[i] * family.k1[j];
            if (sgn(det) != 0) {
                ci = i;
                cj = j;
                break;
            }
        }
    if (ci == m) throw std::invalid_argument("kernel basis vectors are dependent");

    std::set<IntVector> members;
    for (int x = -radius; x <= radius; ++x)
        for (int y = -radius; y <= radius; ++y) {
            const Integer dx = x - family.particular[ci], dy = y - family.particular[cj];
            const Integer alpha_num = dx * family.k2[cj] - family.k2[ci] * dy;
            const Integer beta_num = family.k1[ci] * dy - dx * family.k1[cj];
            if (!mpz_divisible_p(alpha_num.get_mpz_t(), det.get_mpz_t()) ||
                !mpz_divisible_p(beta_num.get_mpz_t(), det.get_mpz_t()))
                continue;
            IntVector u = family.member(Integer(alpha_num / det), Integer(beta_num / det));
            if (in_box(u, radius)) members.insert(std::move(u));
        }
    report.family_count = members.size();

    const std::set<IntVector> searched(brute.begin(), brute.end());
    std::set_difference(searched.begin(), searched.end(), members.begin(), members.end(),
                        std::back_inserter(report.not_in_family));
    std::set_difference(members.begin(), members.end(), searched.begin(), searched.end(),
                        std::back_inserter(report.not_found_by_search));
    report.pass = report.not_in_family.empty() && report.not_found_by_search.empty();
    report.message = report.pass
        ? "search and family agree on " + std::to_string(report.brute_count) + " vectors"
        : std::to_string(report.not_in_family.size()) + " searched solutions outside the family, " +
              std::to_string(report.not_found_by_search.size()) + " family members missed by search";
    return report;
}

} // namespace regchoice::oracle
