#pragma once

#include <array>
#include <cstdint>

namespace qecstab {

// Philox4x32-10 counter-based generator (Salmon, Moraes, Dror, Shaw 2011).
// Pinned by name for reproducibility: the Monte Carlo harness derives one
// independent stream per trial from (seed, stream) so results are identical
// for any worker count. Verified against the published known-answer vectors.
class Philox {
public:
    Philox(std::uint64_t seed, std::uint64_t stream)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          stream_lo_(static_cast<std::uint32_t>(stream)),
          stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

    // One raw 128-bit block for the given block index.
    static std::array<std::uint32_t, 4> block(const std::array<std::uint32_t, 2>& key,
                                              const std::array<std::uint32_t, 4>& counter) {
        std::array<std::uint32_t, 4> x = counter;
        std::uint32_t k0 = key[0], k1 = key[1];
        for (int round = 0; round < 10; ++round) {
            if (round) {
                k0 += 0x9E3779B9u;
                k1 += 0xBB67AE85u;
            }
            const std::uint64_t p0 = std::uint64_t(0xD2511F53u) * x[0];
            const std::uint64_t p1 = std::uint64_t(0xCD9E8D57u) * x[2];
            const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
            const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
            x = {hi1 ^ x[1] ^ k0, lo1, hi0 ^ x[3] ^ k1, lo0};
        }
        return x;
    }

    std::uint32_t next_u32() {
        if (pos_ == 4) {
            buf_ = block(key_, {stream_lo_, stream_hi_, static_cast<std::uint32_t>(block_),
                                static_cast<std::uint32_t>(block_ >> 32)});
            ++block_;
            pos_ = 0;
        }
        return buf_[pos_++];
    }

    std::uint64_t next_u64() {
        const std::uint64_t lo = next_u32();
        const std::uint64_t hi = next_u32();
        return lo | (hi << 32);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::array<std::uint32_t, 2> key_;
    std::uint32_t stream_lo_, stream_hi_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int pos_ = 4;
};

} // namespace qecstab
