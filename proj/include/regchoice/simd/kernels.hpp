#pragma once

// Data-parallel inner loops with a scalar reference implementation and an
// AVX2 variant. The dispatching entry points pick the widest variant the
// running CPU supports; the choice is made once and never changes.

#include <cstdint>
#include <span>
#include <string_view>

namespace regchoice::simd {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// True when the binary carries the variant and the CPU can run it.
bool isa_available(Isa isa) noexcept;

/// Variant used by the dispatching functions below.
Isa active_isa() noexcept;

/// dst[i] ^= src[i]. Sizes must match.
void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) noexcept;

/// out[i] = sum_j a[i*cols + j] * x[j], for a row-major rows x cols matrix.
/// Every partial sum must fit in int32; the oracle checks that bound before
/// calling.
void matvec_i32(std::span<const std::int32_t> a, std::size_t rows, std::size_t cols,
                std::span<const std::int32_t> x, std::span<std::int32_t> out) noexcept;

namespace scalar {
void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) noexcept;
void matvec_i32(std::span<const std::int32_t> a, std::size_t rows, std::size_t cols,
                std::span<const std::int32_t> x, std::span<std::int32_t> out) noexcept;
} // namespace scalar

namespace avx2 {
/// Only call when isa_available(Isa::avx2).
void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) noexcept;
void matvec_i32(std::span<const std::int32_t> a, std::size_t rows, std::size_t cols,
                std::span<const std::int32_t> x, std::span<std::int32_t> out) noexcept;
} // namespace avx2

} // namespace regchoice::simd
