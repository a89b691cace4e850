#include "oracles.hpp"

namespace oracles {

using namespace qecstab;

Eigen::MatrixXcd dense_pauli(const PauliOperator& p) {
    using Mat = Eigen::MatrixXcd;
    const std::complex<double> i(0.0, 1.0);
    Mat X(2, 2), Z(2, 2), I2 = Mat::Identity(2, 2);
    X << 0, 1, 1, 0;
    Z << 1, 0, 0, -1;
    Mat out = Mat::Identity(1, 1);
    for (std::size_t q = 0; q < p.n(); ++q) {
        Mat f = I2; // i^{xz} X^x Z^z
        if (p.z_bit(q))
            f = Z * f;
        if (p.x_bit(q))
            f = X * f;
        if (p.x_bit(q) && p.z_bit(q))
            f = i * f;
        // Kronecker product out = out (x) f
        Mat next(out.rows() * 2, out.cols() * 2);
        for (Eigen::Index r = 0; r < out.rows(); ++r)
            for (Eigen::Index c = 0; c < out.cols(); ++c)
                next.block(r * 2, c * 2, 2, 2) = out(r, c) * f;
        out = next;
    }
    std::complex<double> ph(1.0, 0.0);
    for (int t = 0; t < (p.phase_exp() & 3); ++t)
        ph *= i;
    return ph * out;
}

std::size_t naive_rank(IntMat m) {
    if (m.empty())
        return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && !m[piv][c])
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && m[i][c])
                for (std::size_t j = 0; j < cols; ++j)
                    m[i][j] ^= m[r][j];
        ++r;
    }
    return r;
}

bool naive_in_rowspace(const IntMat& m, const std::vector<int>& v) {
    const std::size_t rows = m.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << rows); ++mask) {
        std::vector<int> acc(v.size(), 0);
        for (std::size_t i = 0; i < rows; ++i)
            if ((mask >> i) & 1)
                for (std::size_t j = 0; j < v.size(); ++j)
                    acc[j] ^= m[i][j];
        if (acc == v)
            return true;
    }
    return false;
}

IntMat to_int_matrix(const gf2::BitMatrix& m) {
    IntMat out(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i][j] = m.get(i, j);
    return out;
}

std::vector<int> to_int_vector(const gf2::BitVector& v) {
    std::vector<int> out(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v.get(i);
    return out;
}

std::size_t exhaustive_min_distance(const StabilizerCode& code) {
    const std::size_t n = code.n();
    const IntMat stacked = to_int_matrix(
        gf2::BitMatrix::hconcat(code.check().hx, code.check().hz));
    std::size_t best = 0;
    for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << (2 * n)); ++bits) {
        PauliOperator p(n);
        for (std::size_t q = 0; q < n; ++q) {
            if ((bits >> q) & 1)
                p.set_x(q, true);
            if ((bits >> (n + q)) & 1)
                p.set_z(q, true);
        }
        // naive syndrome: symplectic product against every stored row
        bool zero = true;
        for (std::size_t i = 0; i < code.r() && zero; ++i) {
            int acc = 0;
            for (std::size_t q = 0; q < n; ++q) {
                acc ^= (code.check().hx.get(i, q) & p.z_bit(q));
                acc ^= (code.check().hz.get(i, q) & p.x_bit(q));
            }
            if (acc)
                zero = false;
        }
        if (!zero)
            continue;
        if (naive_in_rowspace(stacked, to_int_vector(p.to_symplectic())))
            continue;
        const std::size_t w = p.weight();
        if (best == 0 || w < best)
            best = w;
    }
    return best;
}

PauliOperator random_pauli(std::size_t n, Philox& rng) {
    PauliOperator p(n);
    for (std::size_t q = 0; q < n; ++q) {
        switch (rng.next_u32() & 3) {
        case 1: p.set_x(q, true); break;
        case 2: p.set_x(q, true); p.set_z(q, true); break;
        case 3: p.set_z(q, true); break;
        default: break;
        }
    }
    return p;
}

} // namespace oracles
