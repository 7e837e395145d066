#include "regchoice/simd/kernels.hpp"

namespace regchoice::simd::scalar {

void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) noexcept {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
}

void matvec_i32(std::span<const std::int32_t> a, std::size_t rows, std::size_t cols,
                std::span<const std::int32_t> x, std::span<std::int32_t> out) noexcept {
    for (std::size_t i = 0; i < rows; ++i) {
        const std::int32_t* row = a.data() + i * cols;
        std::int32_t acc = 0;
        for (std::size_t j = 0; j < cols; ++j) acc += row[j] * x[j];
        out[i] = acc;
    }
}

} // namespace regchoice::simd::scalar
