#include "regchoice/gf2.hpp"

#include <utility>

#include "regchoice/errors.hpp"
#include "regchoice/simd/kernels.hpp"

namespace regchoice {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

void Gf2Matrix::set(std::size_t i, std::size_t j, bool value) noexcept {
    std::uint64_t& w = data_[i * words_ + j / 64];
    const std::uint64_t bit = std::uint64_t{1} << (j % 64);
    w = value ? (w | bit) : (w & ~bit);
}

BitVector Gf2Matrix::apply(std::span<const std::uint8_t> u) const {
    if (u.size() != cols_) throw DimensionMismatch("GF(2) product: vector length differs");
    BitVector out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint8_t acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc ^= static_cast<std::uint8_t>(get(i, j) & (u[j] & 1U));
        out[i] = acc;
    }
    return out;
}

std::optional<BitVector> solve_gf2(const Gf2Matrix& a, std::span<const std::uint8_t> b) {
    if (b.size() != a.rows())
        throw DimensionMismatch("GF(2) solve: right-hand side length differs from row count");

    // Augmented [A | b]; the extra column sits at index cols.
    const std::size_t n = a.rows(), m = a.cols();
    Gf2Matrix aug(n, m + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) aug.set(i, j, a.get(i, j));
        aug.set(i, m, b[i] & 1U);
    }

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < n; ++c) {
        std::size_t p = r;
        while (p < n && !aug.get(p, c)) ++p;
        if (p == n) continue;
        if (p != r) {
            auto x = aug.row_words(p), y = aug.row_words(r);
            for (std::size_t w = 0; w < x.size(); ++w) std::swap(x[w], y[w]);
        }
        for (std::size_t i = 0; i < n; ++i)
            if (i != r && aug.get(i, c)) simd::xor_words(aug.row_words(i), aug.row_words(r));
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < n; ++i)
        if (aug.get(i, m)) return std::nullopt;

    BitVector u(m, 0);
    for (std::size_t i = 0; i < r; ++i) u[pivot_col[i]] = aug.get(i, m) ? 1 : 0;
    return u;
}

} // namespace regchoice
