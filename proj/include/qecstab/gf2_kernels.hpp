#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qecstab::gf2 {

// Word-level kernels behind all packed GF(2) arithmetic. Every kernel has a
// scalar reference implementation; wider variants (AVX2 on x86, NEON on arm)
// are selected once at startup and must be bit-identical to the reference.
//
// The environment variable QECSTAB_SIMD may be set to the name of a variant
// ("scalar", "avx2", ...) to force a specific implementation.
struct KernelOps {
    const char* name;

    // dst[i] ^= src[i] for i in [0, nwords)
    void (*xor_rows)(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);

    // popcount over a word range
    std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t nwords);

    // popcount(a & b)
    std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b,
                                  std::size_t nwords);

    // popcount((ax & bz) ^ (az & bx)); its parity is the symplectic inner
    // product of [ax|az] and [bx|bz]
    std::uint64_t (*symp_popcount)(const std::uint64_t* ax, const std::uint64_t* az,
                                   const std::uint64_t* bx, const std::uint64_t* bz,
                                   std::size_t nwords);

    // Packed syndrome of an error (ex, ez) against `rows` generator rows laid
    // out contiguously (hx row-major, hz row-major, wpr words per row).
    // Bit i of out = parity((hx_i & ez) ^ (hz_i & ex)).
    // out must hold ceil(rows/64) words and is fully overwritten.
    void (*syndrome_rows)(const std::uint64_t* hx, const std::uint64_t* hz,
                          std::size_t rows, std::size_t wpr,
                          const std::uint64_t* ex, const std::uint64_t* ez,
                          std::uint64_t* out);
};

const KernelOps& scalar_kernels();

// The variant selected for this process (runtime CPU detection + env override).
const KernelOps& kernels();

// Every variant compiled in and usable on this CPU, for equivalence tests.
std::vector<const KernelOps*> available_kernels();

#if defined(QECSTAB_AVX2_TU)
const KernelOps& avx2_kernels(); // defined in the -mavx2 translation unit
#endif

} // namespace qecstab::gf2
