#pragma once

#include "qecstab/bitvec.hpp"

#include <cstdint>
#include <string>

namespace qecstab {

// n-qubit Pauli operator in binary symplectic form. The stored value is
// i^phase * E(x, z) where E(x, z) is the Hermitian representative
// prod_j i^{x_j z_j} X^{x_j} Z^{z_j}; so with phase 0 the single-qubit
// letters are I=(0,0), X=(1,0), Y=(1,1), Z=(0,1).
//
// The symplectic layout is [x | z]: all X bits first, then all Z bits.
class PauliOperator {
public:
    PauliOperator() = default;
    explicit PauliOperator(std::size_t n) : n_(n), x_(n), z_(n) {}
    PauliOperator(gf2::BitVector x, gf2::BitVector z, std::uint8_t phase = 0);

    static PauliOperator identity(std::size_t n) { return PauliOperator(n); }
    // letter: 'X', 'Y' or 'Z' on the given 0-based qubit.
    static PauliOperator single(std::size_t n, std::size_t qubit, char letter);
    static PauliOperator from_symplectic(const gf2::BitVector& v, std::size_t n);
    // Grammar: whitespace-separated letter+index tokens, 1-indexed qubits,
    // identity positions omitted ("X1 Y3 Z7"); "I" or "" is the identity.
    static PauliOperator parse(const std::string& text, std::size_t n);

    std::size_t n() const { return n_; }
    const gf2::BitVector& x_bits() const { return x_; }
    const gf2::BitVector& z_bits() const { return z_; }
    std::uint8_t phase_exp() const { return phase_; }

    bool x_bit(std::size_t q) const { return x_.get(q); }
    bool z_bit(std::size_t q) const { return z_.get(q); }
    void set_x(std::size_t q, bool b) { x_.set(q, b); }
    void set_z(std::size_t q, bool b) { z_.set(q, b); }
    void set_phase_exp(std::uint8_t p) { phase_ = p & 3; }

    // Number of non-identity tensor factors.
    std::size_t weight() const;

    gf2::BitVector to_symplectic() const;

    bool is_identity_letterwise() const { return !x_.any() && !z_.any(); }

    // Rendering includes a phase prefix ("i ", "- ", "-i ") when phase != 0.
    std::string to_string() const;

    friend bool operator==(const PauliOperator& a, const PauliOperator& b) {
        return a.n_ == b.n_ && a.phase_ == b.phase_ && a.x_ == b.x_ && a.z_ == b.z_;
    }

private:
    std::size_t n_ = 0;
    gf2::BitVector x_, z_;
    std::uint8_t phase_ = 0;
};

// c.b^T + a.d^T (mod 2) for p -> [a|b], q -> [c|d]; 0 iff the operators
// commute. Independent of the phase exponents.
int symplectic_product(const PauliOperator& p, const PauliOperator& q);
bool commutes(const PauliOperator& p, const PauliOperator& q);

// Operator product p * q with exact phase tracking. The phase increment for
// E(a,b) E(c,d) = i^d E(a^c, b^d) is
//   d = |a&b| + |c&d| + 2|b&c| - |(a^c)&(b^d)|   (mod 4),
// which follows from X^a Z^b X^c Z^d = (-1)^{bc} X^{a+c} Z^{b+d} per qubit;
// it is unit-tested against dense Kronecker-product matrices.
PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);
inline PauliOperator operator*(const PauliOperator& p, const PauliOperator& q) {
    return multiply(p, q);
}

} // namespace qecstab
