#include "qecstab/pauli.hpp"

#include <cctype>
#include <sstream>

namespace qecstab {

using gf2::BitVector;

PauliOperator::PauliOperator(BitVector x, BitVector z, std::uint8_t phase)
    : n_(x.size()), x_(std::move(x)), z_(std::move(z)), phase_(phase & 3) {
    if (x_.size() != z_.size())
        throw ValidationError("PauliOperator: x/z length mismatch");
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t qubit, char letter) {
    if (qubit >= n)
        throw ValidationError("PauliOperator::single: qubit index out of range");
    PauliOperator p(n);
    switch (letter) {
    case 'X': p.set_x(qubit, true); break;
    case 'Y': p.set_x(qubit, true); p.set_z(qubit, true); break;
    case 'Z': p.set_z(qubit, true); break;
    case 'I': break;
    default: throw ValidationError("PauliOperator::single: letter must be I/X/Y/Z");
    }
    return p;
}

PauliOperator PauliOperator::from_symplectic(const BitVector& v, std::size_t n) {
    if (v.size() != 2 * n)
        throw ValidationError("from_symplectic: vector length must be 2n");
    PauliOperator p(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (v.get(i))
            p.set_x(i, true);
        if (v.get(n + i))
            p.set_z(i, true);
    }
    return p;
}

PauliOperator PauliOperator::parse(const std::string& text, std::size_t n) {
    PauliOperator p(n);
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "I")
            continue;
        const char letter = tok[0];
        if (tok.size() < 2 || (letter != 'X' && letter != 'Y' && letter != 'Z'))
            throw ValidationError("Pauli parse: bad token '" + tok + "'");
        std::size_t idx = 0;
        for (std::size_t i = 1; i < tok.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(tok[i])))
                throw ValidationError("Pauli parse: bad token '" + tok + "'");
            idx = idx * 10 + static_cast<std::size_t>(tok[i] - '0');
        }
        if (idx < 1 || idx > n)
            throw ValidationError("Pauli parse: qubit index out of range in '" + tok + "'");
        const std::size_t q = idx - 1;
        if (p.x_bit(q) || p.z_bit(q))
            throw ValidationError("Pauli parse: duplicate qubit index in '" + tok + "'");
        if (letter == 'X' || letter == 'Y')
            p.set_x(q, true);
        if (letter == 'Z' || letter == 'Y')
            p.set_z(q, true);
    }
    return p;
}

std::size_t PauliOperator::weight() const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < x_.words(); ++i)
        w += static_cast<std::size_t>(std::popcount(x_.word(i) | z_.word(i)));
    return w;
}

BitVector PauliOperator::to_symplectic() const {
    BitVector v(2 * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (x_.get(i))
            v.set(i, true);
        if (z_.get(i))
            v.set(n_ + i, true);
    }
    return v;
}

std::string PauliOperator::to_string() const {
    static const char* prefix[4] = {"", "i ", "- ", "-i "};
    std::string out = prefix[phase_ & 3];
    bool first = true;
    for (std::size_t q = 0; q < n_; ++q) {
        const bool x = x_.get(q), z = z_.get(q);
        if (!x && !z)
            continue;
        if (!first)
            out += ' ';
        out += x ? (z ? 'Y' : 'X') : 'Z';
        out += std::to_string(q + 1);
        first = false;
    }
    if (first)
        out += 'I';
    return out;
}

int symplectic_product(const PauliOperator& p, const PauliOperator& q) {
    if (p.n() != q.n())
        throw ValidationError("symplectic_product: qubit count mismatch");
    const std::size_t w = p.x_bits().words();
    if (w == 0)
        return 0;
    return static_cast<int>(gf2::kernels().symp_popcount(p.x_bits().data(), p.z_bits().data(),
                                                         q.x_bits().data(), q.z_bits().data(),
                                                         w) &
                            1);
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
    return symplectic_product(p, q) == 0;
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
    if (p.n() != q.n())
        throw ValidationError("multiply: qubit count mismatch");
    const std::size_t nw = p.x_bits().words();
    BitVector x(p.n()), z(p.n());
    std::uint64_t ab = 0, cd = 0, bc = 0, mixed = 0;
    for (std::size_t i = 0; i < nw; ++i) {
        const std::uint64_t a = p.x_bits().word(i), b = p.z_bits().word(i);
        const std::uint64_t c = q.x_bits().word(i), d = q.z_bits().word(i);
        ab += std::popcount(a & b);
        cd += std::popcount(c & d);
        bc += std::popcount(b & c);
        mixed += std::popcount((a ^ c) & (b ^ d));
        x.data()[i] = a ^ c;
        z.data()[i] = b ^ d;
    }
    const std::uint64_t delta = (ab + cd + 2 * bc + 4 * nw * 64 - mixed) & 3;
    const std::uint8_t phase =
        static_cast<std::uint8_t>((p.phase_exp() + q.phase_exp() + delta) & 3);
    return PauliOperator(std::move(x), std::move(z), phase);
}

} // namespace qecstab
