#include <stdexcept>

#include "regchoice/errors.hpp"
#include "regchoice/incidence.hpp"

namespace regchoice {

std::string_view rule_name(CountingRule rule) noexcept {
    return rule == CountingRule::single ? "single" : "double";
}

std::optional<CountingRule> parse_rule(std::string_view text) noexcept {
    if (text == "single" || text == "1") return CountingRule::single;
    if (text == "double" || text == "twice" || text == "2") return CountingRule::twice;
    return std::nullopt;
}

RegionChoiceMatrix build_matrix(const FlatDiagram& d, CountingRule rule) {
    const std::size_t n = d.crossing_count(), m = d.region_count();
    RegionChoiceMatrix out{rule, IntMatrix(n, m), {}, {}};
    for (std::size_t j = 0; j < m; ++j) {
        out.col_labels.push_back("r" + std::to_string(j + 1));
        for (std::size_t i = 0; i < n; ++i) {
            const int k = d.corner_count(j, i);
            out.entries(i, j) = rule == CountingRule::single ? (k > 0 ? 1 : 0) : k;
        }
    }
    for (std::size_t i = 0; i < n; ++i) out.row_labels.push_back("v" + std::to_string(i + 1));
    return out;
}

PointVector apply(const RegionChoiceMatrix& m, std::span<const Integer> u) {
    return multiply(m.entries, u);
}

PointVector residual(const RegionChoiceMatrix& m, std::span<const Integer> u,
                     std::span<const Integer> b) {
    if (b.size() != m.entries.rows())
        throw DimensionMismatch("b has " + std::to_string(b.size()) + " entries, expected " +
                                std::to_string(m.entries.rows()));
    return add(multiply(m.entries, u), b);
}

std::vector<std::vector<std::size_t>> rule_gap_columns(const FlatDiagram& d) {
    std::vector<std::vector<std::size_t>> out(d.region_count());
    for (std::size_t j = 0; j < d.region_count(); ++j)
        for (std::size_t i = 0; i < d.crossing_count(); ++i)
            if (d.corner_count(j, i) == 2) out[j].push_back(i);
    return out;
}

Gf2Matrix mod2(const RegionChoiceMatrix& m) {
    if (m.rule != CountingRule::single)
        throw std::invalid_argument("mod 2 reduction is defined for the single rule only");
    Gf2Matrix out(m.entries.rows(), m.entries.cols());
    for (std::size_t i = 0; i < m.entries.rows(); ++i)
        for (std::size_t j = 0; j < m.entries.cols(); ++j)
            out.set(i, j, mpz_odd_p(m.entries(i, j).get_mpz_t()) != 0);
    return out;
}

} // namespace regchoice
