// Compiled with -mavx2 on x86-64 only; callers go through the dispatcher,
// which checks CPU support first.

#include "regchoice/simd/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>

namespace regchoice::simd::avx2 {

void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) noexcept {
    const std::size_t n = dst.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
        const auto* s = reinterpret_cast<const __m256i*>(src.data() + i);
        _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

namespace {
inline std::int32_t hsum_epi32(__m256i v) noexcept {
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i s = _mm_add_epi32(lo, hi);
    s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(1, 0, 3, 2)));
    s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(2, 3, 0, 1)));
    return _mm_cvtsi128_si32(s);
}
} // namespace

void matvec_i32(std::span<const std::int32_t> a, std::size_t rows, std::size_t cols,
                std::span<const std::int32_t> x, std::span<std::int32_t> out) noexcept {
    const std::size_t body = cols - cols % 8;
    for (std::size_t i = 0; i < rows; ++i) {
        const std::int32_t* row = a.data() + i * cols;
        __m256i acc = _mm256_setzero_si256();
        for (std::size_t j = 0; j < body; j += 8) {
            __m256i av = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + j));
            __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + j));
            acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(av, xv));
        }
        std::int32_t total = hsum_epi32(acc);
        for (std::size_t j = body; j < cols; ++j) total += row[j] * x[j];
        out[i] = total;
    }
}

} // namespace regchoice::simd::avx2

#else

// Non-x86 build: forward to the scalar kernels so the symbols exist.
namespace regchoice::simd::avx2 {
void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) noexcept {
    scalar::xor_words(dst, src);
}
void matvec_i32(std::span<const std::int32_t> a, std::size_t rows, std::size_t cols,
                std::span<const std::int32_t> x, std::span<std::int32_t> out) noexcept {
    scalar::matvec_i32(a, rows, cols, x, out);
}
} // namespace regchoice::simd::avx2

#endif
