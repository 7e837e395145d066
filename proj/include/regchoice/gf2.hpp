#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace regchoice {

/// 0/1 vector, one byte per entry.
using BitVector = std::vector<std::uint8_t>;

/// Bit-packed matrix over GF(2); each row occupies whole 64-bit words.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t words_per_row() const noexcept { return words_; }

    bool get(std::size_t i, std::size_t j) const noexcept {
        return (data_[i * words_ + j / 64] >> (j % 64)) & 1U;
    }
    void set(std::size_t i, std::size_t j, bool value) noexcept;

    std::span<std::uint64_t> row_words(std::size_t i) {
        return {data_.data() + i * words_, words_};
    }
    std::span<const std::uint64_t> row_words(std::size_t i) const {
        return {data_.data() + i * words_, words_};
    }

    /// A * u over GF(2).
    BitVector apply(std::span<const std::uint8_t> u) const;

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Gaussian elimination over GF(2). Returns some u with A u = b (mod 2),
/// free variables set to 0, or nullopt when the system is inconsistent.
/// Throws DimensionMismatch when b.size() != A.rows().
std::optional<BitVector> solve_gf2(const Gf2Matrix& a, std::span<const std::uint8_t> b);

} // namespace regchoice
