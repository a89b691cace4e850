#pragma once

#include "qecstab/stabilizer.hpp"

#include <optional>
#include <vector>

namespace qecstab::codes {

// Classical binary code given by an m x n parity-check matrix; rows may be
// dependent.
struct ClassicalCode {
    gf2::BitMatrix h;
    std::size_t n = 0, m = 0;

    ClassicalCode() = default;
    explicit ClassicalCode(gf2::BitMatrix h_) : h(std::move(h_)), n(h.cols()), m(h.rows()) {
        if (n == 0)
            throw ValidationError("ClassicalCode: parity-check matrix has no columns");
    }

    ClassicalCode transposed() const { return ClassicalCode(h.transposed()); }
    std::size_t dimension() const { return n - gf2::rank(h); }
};

// (L-1) x L adjacent-pair checks; the [L, 1, L] repetition code.
ClassicalCode repetition(std::size_t L);

// [7,4,3] Hamming code; columns are the nonzero binary triples in counting
// order 1..7 (most significant bit in row 0). Self-orthogonal: H H^T = 0.
ClassicalCode hamming_7_4();

// Minimum weight of a nonzero codeword (kernel element of h) found by
// weight-bounded enumeration; nullopt when none exists up to max_weight —
// in particular when the kernel is trivial (distance unbounded).
std::optional<std::size_t> classical_distance(const ClassicalCode& c, std::size_t max_weight,
                                              std::size_t budget = 200'000'000);

// CSS code: X-type rows from h1, Z-type rows from h2. Requires matching n and
// h2 h1^T = 0 (reported with a witness row pair on violation).
// k = n - rank(h1) - rank(h2).
StabilizerCode css(const ClassicalCode& h1, const ClassicalCode& h2);

StabilizerCode steane(); // css(hamming, hamming): [[7,1,3]]
StabilizerCode shor();   // the 9-qubit generator list: [[9,1,3]]

// [[3,1]] component codes of the Shor construction.
StabilizerCode bit_flip_code();   // <Z1Z2, Z2Z3>, Xbar = X1X2X3, Zbar = Z1
StabilizerCode phase_flip_code(); // <X1X2, X2X3>, Xbar = X1, Zbar = Z1Z2Z3

// Planar surface code with side length L: [[L^2 + (L-1)^2, 1, L]].
// Qubits are lattice edges, horizontal edges row-major first, then vertical;
// X-checks at vertices, Z-checks at faces; boundary checks have weight 3.
StabilizerCode surface(std::size_t L);

// Toric code on an L x L periodic lattice: [[2L^2, 2, L]]. Full generator
// list is stored (one dependency per check type).
StabilizerCode toric(std::size_t L);

// Hypergraph product: HX = [h1 x I | I x h2^T], HZ = [I x h2 | h1^T x I] on
// n1 n2 + m1 m2 qubits (left Kronecker block first, row-major factors).
StabilizerCode hgp(const ClassicalCode& c1, const ClassicalCode& c2);

// Element of F2[x]/(x^l - 1) stored by coefficients.
struct CirculantPoly {
    std::size_t l = 0;
    gf2::BitVector coeffs; // length l

    CirculantPoly() = default;
    CirculantPoly(std::size_t l_, gf2::BitVector c);
    static CirculantPoly zero(std::size_t l) { return CirculantPoly(l, gf2::BitVector(l)); }
    static CirculantPoly one(std::size_t l);
    static CirculantPoly from_string(const std::string& bits);

    bool is_zero() const { return !coeffs.any(); }
};

CirculantPoly poly_add(const CirculantPoly& a, const CirculantPoly& b);
CirculantPoly poly_mul(const CirculantPoly& a, const CirculantPoly& b);
// a^T(x) = a_0 + a_{l-1} x + ... + a_1 x^{l-1}
CirculantPoly poly_transpose(const CirculantPoly& a);

// l x l circulant whose first column holds the coefficients; column j is
// column 0 cyclically shifted down by j: B[r][c] = a_{(r-c) mod l}.
gf2::BitMatrix circulant_lift(const CirculantPoly& a);

// Matrix over F2[x]/(x^l - 1) with one shared l.
struct PolyMatrix {
    std::size_t rows = 0, cols = 0, l = 0;
    std::vector<CirculantPoly> entries; // row-major

    PolyMatrix() = default;
    PolyMatrix(std::size_t rows_, std::size_t cols_, std::size_t l_);

    const CirculantPoly& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
    CirculantPoly& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }

    // Rows separated by ';', entries by ',', each entry l coefficient bits.
    static PolyMatrix parse(const std::string& text, std::size_t l);

    static PolyMatrix identity(std::size_t n, std::size_t l);
    static PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b);
    static PolyMatrix hconcat(const PolyMatrix& a, const PolyMatrix& b);
    static PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);
    PolyMatrix transposed() const; // transpose + entrywise poly transpose
    bool is_zero() const;

    gf2::BitMatrix lift() const; // every entry becomes its l x l circulant
};

// Lifted product LP(A1, A2): HX = B([A1 x I | I x A2]),
// HZ = B([I x A2^T | A1^T x I]) over R_l, on l (n1 m2 + m1 n2) qubits.
// The CSS constraint is verified over R_l and again after lifting.
StabilizerCode lifted_product(const PolyMatrix& a1, const PolyMatrix& a2);

// Two-level concatenation: every physical qubit of the outer code becomes an
// inner block; inner generators repeat per block and outer generators have
// each single-qubit X/Z replaced by the inner logical Xbar/Zbar. Outer
// logicals lift the same way. Requires inner.k == 1 and outer generators
// acting as I, X or Z on every qubit (no Y), reported by row on violation.
StabilizerCode concatenate(const StabilizerCode& outer, const StabilizerCode& inner);

} // namespace qecstab::codes
