#include "qecstab/pauli.hpp"
#include "qecstab/rng.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace qecstab;
using gf2::BitVector;

namespace {

bool dense_equal(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() &&
           (a - b).cwiseAbs().maxCoeff() < 1e-12;
}

} // namespace

TEST_CASE("symplectic product: X vs Z, self, X(x)I vs I(x)Z") {
    const auto X = PauliOperator::single(1, 0, 'X');
    const auto Z = PauliOperator::single(1, 0, 'Z');
    CHECK(symplectic_product(X, Z) == 1); // XZ = -ZX
    CHECK(symplectic_product(X, X) == 0);
    CHECK(symplectic_product(Z, Z) == 0);

    const auto x1 = PauliOperator::single(2, 0, 'X');
    const auto z2 = PauliOperator::single(2, 1, 'Z');
    CHECK(symplectic_product(x1, z2) == 0);
    // dense commutator oracle
    const auto a = oracles::dense_pauli(x1), b = oracles::dense_pauli(z2);
    CHECK(dense_equal(a * b, b * a));

    CHECK_THROWS_AS(symplectic_product(X, x1), ValidationError);
}

TEST_CASE("symplectic product is symmetric") {
    Philox rng(21, 0);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 1 + rng.next_u32() % 6;
        const auto p = oracles::random_pauli(n, rng);
        const auto q = oracles::random_pauli(n, rng);
        CHECK(symplectic_product(p, q) == symplectic_product(q, p));
    }
}

TEST_CASE("commutes: X vs X, X vs Z") {
    const auto X = PauliOperator::single(1, 0, 'X');
    const auto Z = PauliOperator::single(1, 0, 'Z');
    CHECK(commutes(X, X));
    CHECK_FALSE(commutes(X, Z));
}

TEST_CASE("multiply: identity, XY = iZ") {
    const auto I = PauliOperator::identity(3);
    const auto p = PauliOperator::parse("X1 Y2 Z3", 3);
    CHECK(multiply(I, p) == p);
    CHECK(multiply(p, I) == p);

    const auto X = PauliOperator::single(1, 0, 'X');
    const auto Y = PauliOperator::single(1, 0, 'Y');
    const auto XY = multiply(X, Y);
    CHECK_FALSE(XY.x_bit(0));
    CHECK(XY.z_bit(0));
    CHECK(XY.phase_exp() == 1); // XY = iZ
}

TEST_CASE("full 1-qubit multiplication table matches dense 2x2 products") {
    const char letters[4] = {'I', 'X', 'Y', 'Z'};
    for (char a : letters)
        for (char b : letters) {
            const auto p = PauliOperator::single(1, 0, a);
            const auto q = PauliOperator::single(1, 0, b);
            const auto prod = multiply(p, q);
            CHECK(dense_equal(oracles::dense_pauli(prod),
                              oracles::dense_pauli(p) * oracles::dense_pauli(q)));
        }
}

TEST_CASE("dense oracle equivalence for multiply/commutes, n <= 3, 1000 pairs") {
    Philox rng(22, 0);
    for (int rep = 0; rep < 1000; ++rep) {
        const std::size_t n = 1 + rng.next_u32() % 3;
        auto p = oracles::random_pauli(n, rng);
        auto q = oracles::random_pauli(n, rng);
        p.set_phase_exp(static_cast<std::uint8_t>(rng.next_u32() & 3));
        q.set_phase_exp(static_cast<std::uint8_t>(rng.next_u32() & 3));
        const auto dp = oracles::dense_pauli(p);
        const auto dq = oracles::dense_pauli(q);
        CHECK(dense_equal(oracles::dense_pauli(multiply(p, q)), dp * dq));
        CHECK(commutes(p, q) == dense_equal(dp * dq, dq * dp));
    }
}

TEST_CASE("gamma is a homomorphism and phases shift additively") {
    Philox rng(23, 0);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 1 + rng.next_u32() % 5;
        auto p = oracles::random_pauli(n, rng);
        auto q = oracles::random_pauli(n, rng);
        auto xored = p.to_symplectic();
        xored.xor_with(q.to_symplectic());
        CHECK(multiply(p, q).to_symplectic() == xored);

        const auto base = multiply(p, q);
        for (std::uint8_t shift = 0; shift < 4; ++shift) {
            auto p2 = p;
            p2.set_phase_exp(static_cast<std::uint8_t>((p.phase_exp() + shift) & 3));
            CHECK(multiply(p2, q).phase_exp() == ((base.phase_exp() + shift) & 3));
        }
    }
}

TEST_CASE("multiply(p, p) is a phase times identity") {
    Philox rng(24, 0);
    for (int rep = 0; rep < 100; ++rep) {
        const auto p = oracles::random_pauli(1 + rng.next_u32() % 6, rng);
        const auto sq = multiply(p, p);
        CHECK(sq.is_identity_letterwise());
        CHECK(dense_equal(oracles::dense_pauli(sq),
                          oracles::dense_pauli(p) * oracles::dense_pauli(p)));
    }
}

TEST_CASE("weight: identity, Steane logical, Y2 Z5") {
    CHECK(PauliOperator::identity(7).weight() == 0);
    CHECK(PauliOperator::parse("X1 X2 X3 X4 X5 X6 X7", 7).weight() == 7);
    CHECK(PauliOperator::parse("Y2 Z5", 7).weight() == 2);
}

TEST_CASE("symplectic layout is [x | z]") {
    const auto Y = PauliOperator::single(1, 0, 'Y');
    CHECK(Y.to_symplectic() == BitVector::from_string("11"));
    CHECK(PauliOperator::identity(2).to_symplectic() == BitVector::from_string("0000"));

    Philox rng(25, 0);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = 1 + rng.next_u32() % 8;
        BitVector v(2 * n);
        for (std::size_t i = 0; i < 2 * n; ++i)
            v.set(i, rng.next_u32() & 1);
        CHECK(PauliOperator::from_symplectic(v, n).to_symplectic() == v);
    }
    CHECK_THROWS_AS(PauliOperator::from_symplectic(BitVector(3), 2), ValidationError);
}

TEST_CASE("text grammar round trip and rejection") {
    const auto p = PauliOperator::parse("X1 Y3 Z7", 7);
    CHECK(p.to_string() == "X1 Y3 Z7");
    CHECK(PauliOperator::parse(p.to_string(), 7) == p);
    CHECK(PauliOperator::identity(4).to_string() == "I");
    CHECK(PauliOperator::parse("I", 4) == PauliOperator::identity(4));
    CHECK(PauliOperator::parse("", 4) == PauliOperator::identity(4));

    CHECK_THROWS_AS(PauliOperator::parse("X0", 4), ValidationError);
    CHECK_THROWS_AS(PauliOperator::parse("X5", 4), ValidationError);
    CHECK_THROWS_AS(PauliOperator::parse("Q1", 4), ValidationError);
    CHECK_THROWS_AS(PauliOperator::parse("X1 Z1", 4), ValidationError);
    CHECK_THROWS_AS(PauliOperator::parse("X", 4), ValidationError);
}
