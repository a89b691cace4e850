#include "qecstab/gf2_kernels.hpp"

#include <bit>
#include <cstdlib>
#include <cstring>
#include <string_view>

namespace qecstab::gf2 {

namespace {

void xor_rows_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
    for (std::size_t i = 0; i < nwords; ++i)
        dst[i] ^= src[i];
}

std::uint64_t popcount_scalar(const std::uint64_t* a, std::size_t nwords) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < nwords; ++i)
        c += std::popcount(a[i]);
    return c;
}

std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b,
                                  std::size_t nwords) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < nwords; ++i)
        c += std::popcount(a[i] & b[i]);
    return c;
}

std::uint64_t symp_popcount_scalar(const std::uint64_t* ax, const std::uint64_t* az,
                                   const std::uint64_t* bx, const std::uint64_t* bz,
                                   std::size_t nwords) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < nwords; ++i)
        c += std::popcount((ax[i] & bz[i]) ^ (az[i] & bx[i]));
    return c;
}

void syndrome_rows_scalar(const std::uint64_t* hx, const std::uint64_t* hz,
                          std::size_t rows, std::size_t wpr,
                          const std::uint64_t* ex, const std::uint64_t* ez,
                          std::uint64_t* out) {
    const std::size_t owords = (rows + 63) / 64;
    std::memset(out, 0, owords * sizeof(std::uint64_t));
    for (std::size_t r = 0; r < rows; ++r) {
        std::uint64_t acc = 0;
        const std::uint64_t* rx = hx + r * wpr;
        const std::uint64_t* rz = hz + r * wpr;
        for (std::size_t i = 0; i < wpr; ++i)
            acc ^= (rx[i] & ez[i]) ^ (rz[i] & ex[i]);
        out[r >> 6] |= static_cast<std::uint64_t>(std::popcount(acc) & 1) << (r & 63);
    }
}

constexpr KernelOps kScalar = {
    "scalar",
    &xor_rows_scalar,
    &popcount_scalar,
    &and_popcount_scalar,
    &symp_popcount_scalar,
    &syndrome_rows_scalar,
};

const KernelOps* select_kernels() {
    const KernelOps* best = &kScalar;
#if defined(QECSTAB_AVX2_TU)
    if (__builtin_cpu_supports("avx2"))
        best = &avx2_kernels();
#endif
    if (const char* env = std::getenv("QECSTAB_SIMD")) {
        std::string_view want(env);
        for (const KernelOps* k : available_kernels())
            if (want == k->name)
                return k;
        return &kScalar; // unknown name: fall back to the reference
    }
    return best;
}

} // namespace

const KernelOps& scalar_kernels() { return kScalar; }

const KernelOps& kernels() {
    static const KernelOps* selected = select_kernels();
    return *selected;
}

std::vector<const KernelOps*> available_kernels() {
    std::vector<const KernelOps*> out{&kScalar};
#if defined(QECSTAB_AVX2_TU)
    if (__builtin_cpu_supports("avx2"))
        out.push_back(&avx2_kernels());
#endif
    return out;
}

} // namespace qecstab::gf2
