#pragma once

#include "qecstab/errors.hpp"
#include "qecstab/gf2_kernels.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace qecstab::gf2 {

// Packed bit vector. Padding bits above size() are kept zero at all times so
// word-level comparisons and popcounts need no masking.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_(word_count(n), 0) {}

    static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

    static BitVector from_string(const std::string& bits) {
        BitVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == '1')
                v.set(i, true);
            else if (bits[i] != '0')
                throw ValidationError("bit string contains a character other than 0/1");
        }
        return v;
    }

    std::size_t size() const { return n_; }
    std::size_t words() const { return w_.size(); }
    const std::uint64_t* data() const { return w_.data(); }
    std::uint64_t* data() { return w_.data(); }
    std::uint64_t word(std::size_t i) const { return w_[i]; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool b) {
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (b)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    void xor_with(const BitVector& other) {
        if (other.n_ != n_)
            throw ValidationError("BitVector xor: length mismatch");
        kernels().xor_rows(w_.data(), other.w_.data(), w_.size());
    }

    std::size_t popcount() const {
        return w_.empty() ? 0 : kernels().popcount(w_.data(), w_.size());
    }

    bool any() const {
        for (std::uint64_t w : w_)
            if (w)
                return true;
        return false;
    }

    // Index of the lowest set bit, or size() if none.
    std::size_t first_set() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i])
                return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
        return n_;
    }

    // Lexicographic order reading bits from index 0 upward, 0 < 1.
    bool lex_less(const BitVector& other) const {
        for (std::size_t i = 0; i < w_.size() && i < other.w_.size(); ++i) {
            const std::uint64_t d = w_[i] ^ other.w_[i];
            if (d)
                return !((w_[i] >> std::countr_zero(d)) & 1);
        }
        return n_ < other.n_;
    }

    std::string to_string() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i)
            if (get(i))
                s[i] = '1';
        return s;
    }

    friend bool operator==(const BitVector& a, const BitVector& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace qecstab::gf2
