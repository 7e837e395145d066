#include "regchoice/simd/kernels.hpp"

namespace regchoice::simd {

namespace {

struct KernelTable {
    Isa isa;
    void (*xor_words)(std::span<std::uint64_t>, std::span<const std::uint64_t>) noexcept;
    void (*matvec_i32)(std::span<const std::int32_t>, std::size_t, std::size_t,
                       std::span<const std::int32_t>, std::span<std::int32_t>) noexcept;
};

bool cpu_has_avx2() noexcept {
#if defined(REGCHOICE_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const KernelTable& table() noexcept {
    static const KernelTable t = cpu_has_avx2()
        ? KernelTable{Isa::avx2, &avx2::xor_words, &avx2::matvec_i32}
        : KernelTable{Isa::scalar, &scalar::xor_words, &scalar::matvec_i32};
    return t;
}

} // namespace

std::string_view isa_name(Isa isa) noexcept {
    return isa == Isa::avx2 ? "avx2" : "scalar";
}

bool isa_available(Isa isa) noexcept {
    return isa == Isa::scalar || cpu_has_avx2();
}

Isa active_isa() noexcept { return table().isa; }

void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) noexcept {
    table().xor_words(dst, src);
}

void matvec_i32(std::span<const std::int32_t> a, std::size_t rows, std::size_t cols,
                std::span<const std::int32_t> x, std::span<std::int32_t> out) noexcept {
    table().matvec_i32(a, rows, cols, x, out);
}

} // namespace regchoice::simd
