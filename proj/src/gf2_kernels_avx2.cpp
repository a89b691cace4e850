// AVX2 variants of the GF(2) word kernels. This translation unit is compiled
// with -mavx2; callers reach it only through the runtime dispatch table after
// a cpuid check.

#include "qecstab/gf2_kernels.hpp"

#include <bit>
#include <cstring>
#include <immintrin.h>

namespace qecstab::gf2 {

namespace {

inline __m256i popcount_epi64(__m256i v) {
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                  _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::uint64_t hsum_epi64(__m256i v) {
    __m128i lo = _mm256_castsi256_si128(v);
    __m128i hi = _mm256_extracti128_si256(v, 1);
    __m128i s = _mm_add_epi64(lo, hi);
    return static_cast<std::uint64_t>(_mm_cvtsi128_si64(s)) +
           static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

// Per-lane parity of four 64-bit words, returned as 4 mask bits (lane 0 = bit 0).
inline unsigned parity4_epi64(__m256i v) {
    v = _mm256_xor_si256(v, _mm256_srli_epi64(v, 32));
    v = _mm256_xor_si256(v, _mm256_srli_epi64(v, 16));
    v = _mm256_xor_si256(v, _mm256_srli_epi64(v, 8));
    v = _mm256_xor_si256(v, _mm256_srli_epi64(v, 4));
    v = _mm256_xor_si256(v, _mm256_srli_epi64(v, 2));
    v = _mm256_xor_si256(v, _mm256_srli_epi64(v, 1));
    v = _mm256_slli_epi64(v, 63);
    return static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(v)));
}

void xor_rows_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < nwords; ++i)
        dst[i] ^= src[i];
}

std::uint64_t popcount_avx2(const std::uint64_t* a, std::size_t nwords) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_add_epi64(acc, popcount_epi64(v));
    }
    std::uint64_t c = hsum_epi64(acc);
    for (; i < nwords; ++i)
        c += std::popcount(a[i]);
    return c;
}

std::uint64_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t nwords) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_and_si256(va, vb)));
    }
    std::uint64_t c = hsum_epi64(acc);
    for (; i < nwords; ++i)
        c += std::popcount(a[i] & b[i]);
    return c;
}

std::uint64_t symp_popcount_avx2(const std::uint64_t* ax, const std::uint64_t* az,
                                 const std::uint64_t* bx, const std::uint64_t* bz,
                                 std::size_t nwords) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i vax = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ax + i));
        __m256i vaz = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(az + i));
        __m256i vbx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bx + i));
        __m256i vbz = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bz + i));
        __m256i t = _mm256_xor_si256(_mm256_and_si256(vax, vbz), _mm256_and_si256(vaz, vbx));
        acc = _mm256_add_epi64(acc, popcount_epi64(t));
    }
    std::uint64_t c = hsum_epi64(acc);
    for (; i < nwords; ++i)
        c += std::popcount((ax[i] & bz[i]) ^ (az[i] & bx[i]));
    return c;
}

void syndrome_rows_avx2(const std::uint64_t* hx, const std::uint64_t* hz,
                        std::size_t rows, std::size_t wpr,
                        const std::uint64_t* ex, const std::uint64_t* ez,
                        std::uint64_t* out) {
    const std::size_t owords = (rows + 63) / 64;
    std::memset(out, 0, owords * sizeof(std::uint64_t));
    if (wpr == 1) {
        // Hot case (n <= 64): four generator rows per vector.
        const __m256i vez = _mm256_set1_epi64x(static_cast<long long>(ez[0]));
        const __m256i vex = _mm256_set1_epi64x(static_cast<long long>(ex[0]));
        std::size_t r = 0;
        for (; r + 4 <= rows; r += 4) {
            __m256i rx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(hx + r));
            __m256i rz = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(hz + r));
            __m256i t = _mm256_xor_si256(_mm256_and_si256(rx, vez), _mm256_and_si256(rz, vex));
            out[r >> 6] |= static_cast<std::uint64_t>(parity4_epi64(t)) << (r & 63);
        }
        for (; r < rows; ++r) {
            std::uint64_t acc = (hx[r] & ez[0]) ^ (hz[r] & ex[0]);
            out[r >> 6] |= static_cast<std::uint64_t>(std::popcount(acc) & 1) << (r & 63);
        }
        return;
    }
    for (std::size_t r = 0; r < rows; ++r) {
        std::uint64_t c = symp_popcount_avx2(hx + r * wpr, hz + r * wpr, ex, ez, wpr);
        out[r >> 6] |= (c & 1) << (r & 63);
    }
}

constexpr KernelOps kAvx2 = {
    "avx2",
    &xor_rows_avx2,
    &popcount_avx2,
    &and_popcount_avx2,
    &symp_popcount_avx2,
    &syndrome_rows_avx2,
};

} // namespace

const KernelOps& avx2_kernels() { return kAvx2; }

} // namespace qecstab::gf2
