#include "qecstab/kl.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

namespace qecstab {

namespace {

using Mat = Eigen::MatrixXcd;
using Cx = std::complex<double>;

Cx phase_to_complex(unsigned e) {
    switch (e & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
    }
}

// Column action of i^phase E(x, z) on basis state |j>: qubit q maps to bit
// (n-1-q) of the index, matching Kronecker-product order. E(x,z)|j> =
// i^{|x&z|} (-1)^{z.j} |j ^ x> with the sign evaluated before the flip.
struct PauliAction {
    std::size_t flip = 0;       // basis index xor mask from the X part
    std::size_t zmask = 0;      // mask of Z positions
    unsigned base_phase = 0;    // i exponent: operator phase + |x & z|

    PauliAction(const PauliOperator& p, std::size_t n) {
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t bit = std::size_t(1) << (n - 1 - q);
            if (p.x_bit(q))
                flip |= bit;
            if (p.z_bit(q))
                zmask |= bit;
            if (p.x_bit(q) && p.z_bit(q))
                ++base_phase;
        }
        base_phase = (base_phase + p.phase_exp()) & 3;
    }

    Cx coeff(std::size_t j) const {
        const bool neg = std::popcount(static_cast<std::uint64_t>(j & zmask)) & 1;
        Cx c = phase_to_complex(base_phase);
        return neg ? -c : c;
    }
};

// A * M for Pauli A, via row permutation: (A M)(j ^ flip, :) = coeff(j) M(j, :).
Mat pauli_left_mul(const PauliAction& a, const Mat& m) {
    Mat out(m.rows(), m.cols());
    for (Eigen::Index j = 0; j < m.rows(); ++j) {
        const auto u = static_cast<std::size_t>(j);
        out.row(static_cast<Eigen::Index>(u ^ a.flip)) = a.coeff(u) * m.row(j);
    }
    return out;
}

} // namespace

KlResult kl_check(const StabilizerCode& code, const std::vector<PauliOperator>& errors,
                  double tol) {
    const std::size_t n = code.n();
    if (n > 12)
        throw ResourceLimitError("kl_check: dense oracle limited to n <= 12, got n=" +
                                 std::to_string(n));
    for (const auto& e : errors)
        if (e.n() != n)
            throw ValidationError("kl_check: error operator qubit count mismatch");

    const std::size_t dim = std::size_t(1) << n;
    Mat P = Mat::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t g = 0; g < code.r(); ++g) {
        const PauliAction act(code.generator(g), n);
        P = 0.5 * (P + pauli_left_mul(act, P));
    }

    // Projector sanity: Hermitian, trace 2^k, idempotent. Failure means the
    // stored generators do not admit a consistent +1 eigenspace.
    const double expected_trace = std::ldexp(1.0, static_cast<int>(code.k()));
    if (std::abs(P.trace().real() - expected_trace) > 1e-6 ||
        std::abs(P.trace().imag()) > 1e-6 ||
        (P - P.adjoint()).cwiseAbs().maxCoeff() > 1e-9 ||
        ((P * P) - P).cwiseAbs().maxCoeff() > 1e-9)
        throw ValidationError("kl_check: generators do not produce a codespace projector");

    // Reference entry of P for scalar extraction.
    Eigen::Index pr = 0, pc = 0;
    P.cwiseAbs().maxCoeff(&pr, &pc);

    const std::size_t m = errors.size();
    KlResult res;
    res.m = m;
    res.c.assign(m * m, Cx(0, 0));
    res.pass = true;

    std::vector<Mat> right(m); // E_j P
    for (std::size_t j = 0; j < m; ++j)
        right[j] = pauli_left_mul(PauliAction(errors[j], n), P);

    for (std::size_t i = 0; i < m; ++i) {
        // P being Hermitian, P Ei^dag Ej P = (Ei P)^dag (Ej P).
        const Mat left = right[i].adjoint();
        for (std::size_t j = 0; j < m; ++j) {
            const Mat M = left * right[j];
            const Cx c = M(pr, pc) / P(pr, pc);
            const double dev = (M - c * P).cwiseAbs().maxCoeff();
            res.c[i * m + j] = c;
            res.max_deviation = std::max(res.max_deviation, dev);
            if (dev > tol)
                res.pass = false;
        }
    }

    if (res.pass) {
        for (std::size_t i = 0; i < m && res.pass; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (std::abs(res.c[i * m + j] - std::conj(res.c[j * m + i])) > tol) {
                    res.pass = false;
                    break;
                }
    }
    return res;
}

} // namespace qecstab
