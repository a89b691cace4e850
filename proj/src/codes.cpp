#include "qecstab/codes.hpp"

#include <string>

namespace qecstab::codes {

using gf2::BitMatrix;
using gf2::BitVector;

ClassicalCode repetition(std::size_t L) {
    if (L < 2)
        throw ValidationError("repetition: L must be at least 2");
    BitMatrix h(L - 1, L);
    for (std::size_t i = 0; i + 1 < L; ++i) {
        h.set(i, i, true);
        h.set(i, i + 1, true);
    }
    return ClassicalCode(std::move(h));
}

ClassicalCode hamming_7_4() {
    BitMatrix h(3, 7);
    for (std::size_t j = 1; j <= 7; ++j) {
        if (j & 4)
            h.set(0, j - 1, true);
        if (j & 2)
            h.set(1, j - 1, true);
        if (j & 1)
            h.set(2, j - 1, true);
    }
    return ClassicalCode(std::move(h));
}

std::optional<std::size_t> classical_distance(const ClassicalCode& c, std::size_t max_weight,
                                              std::size_t budget) {
    const std::size_t n = c.n;
    std::size_t planned = 0;
    for (std::size_t w = 1; w <= std::min(max_weight, n); ++w) {
        long double lvl = 1.0L;
        for (std::size_t i = 0; i < w; ++i)
            lvl = lvl * static_cast<long double>(n - i) / static_cast<long double>(i + 1);
        if (lvl > static_cast<long double>(budget) ||
            planned > budget - static_cast<std::size_t>(lvl))
            throw ResourceLimitError("classical_distance: enumeration exceeds budget");
        planned += static_cast<std::size_t>(lvl);
    }
    std::vector<std::size_t> supp;
    BitVector v(n);
    for (std::size_t w = 1; w <= std::min(max_weight, n); ++w) {
        supp.resize(w);
        for (std::size_t i = 0; i < w; ++i)
            supp[i] = i;
        for (;;) {
            v.clear();
            for (std::size_t q : supp)
                v.set(q, true);
            if (!c.h.apply(v).any())
                return w;
            // next combination
            std::size_t i = w;
            bool more = false;
            while (i-- > 0) {
                if (supp[i] < n - (w - i)) {
                    ++supp[i];
                    for (std::size_t j = i + 1; j < w; ++j)
                        supp[j] = supp[j - 1] + 1;
                    more = true;
                    break;
                }
            }
            if (!more)
                break;
        }
    }
    return std::nullopt;
}

StabilizerCode css(const ClassicalCode& c1, const ClassicalCode& c2) {
    if (c1.n != c2.n)
        throw ValidationError("css: component codes have different lengths");
    // Dual containment: h2 h1^T = 0.
    const BitMatrix prod = BitMatrix::multiply(c2.h, c1.h.transposed());
    for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j)
            if (prod.get(i, j))
                throw ValidationError("css: dual containment violated: h2 row " +
                                      std::to_string(i) + " not orthogonal to h1 row " +
                                      std::to_string(j));
    const std::size_t n = c1.n;
    BitMatrix hx = BitMatrix::vconcat(c1.h, BitMatrix(c2.m, n));
    BitMatrix hz = BitMatrix::vconcat(BitMatrix(c1.m, n), c2.h);
    return StabilizerCode::validate(CheckMatrix(std::move(hx), std::move(hz)),
                                    /*allow_redundant=*/true);
}

StabilizerCode steane() { return css(hamming_7_4(), hamming_7_4()); }

StabilizerCode shor() {
    const std::size_t n = 9;
    BitMatrix hx(8, n), hz(8, n);
    const std::size_t zpairs[6][2] = {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}};
    for (std::size_t i = 0; i < 6; ++i) {
        hz.set(i, zpairs[i][0], true);
        hz.set(i, zpairs[i][1], true);
    }
    for (std::size_t q = 0; q < 6; ++q)
        hx.set(6, q, true);
    for (std::size_t q = 3; q < 9; ++q)
        hx.set(7, q, true);
    return StabilizerCode::validate(CheckMatrix(std::move(hx), std::move(hz)));
}

StabilizerCode bit_flip_code() {
    BitMatrix hx(2, 3), hz(2, 3);
    hz.set(0, 0, true);
    hz.set(0, 1, true);
    hz.set(1, 1, true);
    hz.set(1, 2, true);
    return StabilizerCode::validate(CheckMatrix(std::move(hx), std::move(hz)));
}

StabilizerCode phase_flip_code() {
    BitMatrix hx(2, 3), hz(2, 3);
    hx.set(0, 0, true);
    hx.set(0, 1, true);
    hx.set(1, 1, true);
    hx.set(1, 2, true);
    return StabilizerCode::validate(CheckMatrix(std::move(hx), std::move(hz)));
}

StabilizerCode surface(std::size_t L) {
    if (L < 2)
        throw ValidationError("surface: L must be at least 2");
    // L rows of L horizontal edges (dangling at the left/right boundaries)
    // then (L-1)^2 vertical edges, both row-major.
    const std::size_t nh = L * L;
    const std::size_t nv = (L - 1) * (L - 1);
    const std::size_t n = nh + nv;
    auto hedge = [L](std::size_t i, std::size_t j) { return i * L + j; };
    auto vedge = [L, nh](std::size_t i, std::size_t j) { return nh + i * (L - 1) + j; };

    const std::size_t rx = L * (L - 1), rz = (L - 1) * L;
    BitMatrix hx(rx + rz, n), hz(rx + rz, n);
    std::size_t row = 0;
    // X-check at vertex (i, j): horizontal slots j and j+1 of row i, vertical
    // edges above and below.
    for (std::size_t i = 0; i < L; ++i)
        for (std::size_t j = 0; j + 1 < L; ++j, ++row) {
            hx.set(row, hedge(i, j), true);
            hx.set(row, hedge(i, j + 1), true);
            if (i > 0)
                hx.set(row, vedge(i - 1, j), true);
            if (i + 1 < L)
                hx.set(row, vedge(i, j), true);
        }
    // Z-check at face (i, j) between vertex rows i and i+1, horizontal slot j.
    for (std::size_t i = 0; i + 1 < L; ++i)
        for (std::size_t j = 0; j < L; ++j, ++row) {
            hz.set(row, hedge(i, j), true);
            hz.set(row, hedge(i + 1, j), true);
            if (j > 0)
                hz.set(row, vedge(i, j - 1), true);
            if (j + 1 < L)
                hz.set(row, vedge(i, j), true);
        }
    return StabilizerCode::validate(CheckMatrix(std::move(hx), std::move(hz)));
}

StabilizerCode toric(std::size_t L) {
    if (L < 2)
        throw ValidationError("toric: L must be at least 2");
    const std::size_t n = 2 * L * L;
    auto hedge = [L](std::size_t i, std::size_t j) { return i * L + j; };
    auto vedge = [L](std::size_t i, std::size_t j) { return L * L + i * L + j; };

    BitMatrix hx(2 * L * L, n), hz(2 * L * L, n);
    std::size_t row = 0;
    for (std::size_t i = 0; i < L; ++i) // X-checks at vertices
        for (std::size_t j = 0; j < L; ++j, ++row) {
            hx.set(row, hedge(i, j), true);
            hx.set(row, hedge(i, (j + L - 1) % L), true);
            hx.set(row, vedge(i, j), true);
            hx.set(row, vedge((i + L - 1) % L, j), true);
        }
    for (std::size_t i = 0; i < L; ++i) // Z-checks at faces
        for (std::size_t j = 0; j < L; ++j, ++row) {
            hz.set(row, hedge(i, j), true);
            hz.set(row, hedge((i + 1) % L, j), true);
            hz.set(row, vedge(i, j), true);
            hz.set(row, vedge(i, (j + 1) % L), true);
        }
    return StabilizerCode::validate(CheckMatrix(std::move(hx), std::move(hz)),
                                    /*allow_redundant=*/true);
}

StabilizerCode hgp(const ClassicalCode& c1, const ClassicalCode& c2) {
    const std::size_t n1 = c1.n, m1 = c1.m, n2 = c2.n, m2 = c2.m;
    const BitMatrix hx_blocks = BitMatrix::hconcat(
        BitMatrix::kronecker(c1.h, BitMatrix::identity(n2)),
        BitMatrix::kronecker(BitMatrix::identity(m1), c2.h.transposed()));
    const BitMatrix hz_blocks = BitMatrix::hconcat(
        BitMatrix::kronecker(BitMatrix::identity(n1), c2.h),
        BitMatrix::kronecker(c1.h.transposed(), BitMatrix::identity(m2)));
    const std::size_t n = n1 * n2 + m1 * m2;
    const std::size_t rx = m1 * n2, rz = n1 * m2;
    BitMatrix hx = BitMatrix::vconcat(hx_blocks, BitMatrix(rz, n));
    BitMatrix hz = BitMatrix::vconcat(BitMatrix(rx, n), hz_blocks);
    return StabilizerCode::validate(CheckMatrix(std::move(hx), std::move(hz)),
                                    /*allow_redundant=*/true);
}

CirculantPoly::CirculantPoly(std::size_t l_, BitVector c) : l(l_), coeffs(std::move(c)) {
    if (l < 1)
        throw ValidationError("CirculantPoly: l must be at least 1");
    if (coeffs.size() != l)
        throw ValidationError("CirculantPoly: coefficient count must equal l");
}

CirculantPoly CirculantPoly::one(std::size_t l) {
    BitVector c(l);
    c.set(0, true);
    return CirculantPoly(l, std::move(c));
}

CirculantPoly CirculantPoly::from_string(const std::string& bits) {
    return CirculantPoly(bits.size(), BitVector::from_string(bits));
}

CirculantPoly poly_add(const CirculantPoly& a, const CirculantPoly& b) {
    if (a.l != b.l)
        throw ValidationError("poly_add: mismatched l");
    CirculantPoly out = a;
    out.coeffs.xor_with(b.coeffs);
    return out;
}

CirculantPoly poly_mul(const CirculantPoly& a, const CirculantPoly& b) {
    if (a.l != b.l)
        throw ValidationError("poly_mul: mismatched l");
    CirculantPoly out = CirculantPoly::zero(a.l);
    for (std::size_t i = 0; i < a.l; ++i) {
        if (!a.coeffs.get(i))
            continue;
        for (std::size_t j = 0; j < b.l; ++j)
            if (b.coeffs.get(j))
                out.coeffs.flip((i + j) % a.l);
    }
    return out;
}

CirculantPoly poly_transpose(const CirculantPoly& a) {
    CirculantPoly out = CirculantPoly::zero(a.l);
    for (std::size_t i = 0; i < a.l; ++i)
        if (a.coeffs.get(i))
            out.coeffs.set(i == 0 ? 0 : a.l - i, true);
    return out;
}

BitMatrix circulant_lift(const CirculantPoly& a) {
    BitMatrix m(a.l, a.l);
    for (std::size_t i = 0; i < a.l; ++i) {
        if (!a.coeffs.get(i))
            continue;
        for (std::size_t c = 0; c < a.l; ++c)
            m.set((i + c) % a.l, c, true);
    }
    return m;
}

PolyMatrix::PolyMatrix(std::size_t rows_, std::size_t cols_, std::size_t l_)
    : rows(rows_), cols(cols_), l(l_), entries(rows_ * cols_, CirculantPoly::zero(l_)) {
    if (l < 1)
        throw ValidationError("PolyMatrix: l must be at least 1");
}

PolyMatrix PolyMatrix::parse(const std::string& text, std::size_t l) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> current;
    std::string tok;
    auto push_tok = [&]() {
        if (tok.empty())
            throw ValidationError("PolyMatrix::parse: empty entry");
        current.push_back(tok);
        tok.clear();
    };
    for (char ch : text) {
        if (ch == ',') {
            push_tok();
        } else if (ch == ';') {
            push_tok();
            cells.push_back(std::move(current));
            current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            tok += ch;
        }
    }
    push_tok();
    cells.push_back(std::move(current));
    const std::size_t r = cells.size(), c = cells[0].size();
    PolyMatrix m(r, c, l);
    for (std::size_t i = 0; i < r; ++i) {
        if (cells[i].size() != c)
            throw ValidationError("PolyMatrix::parse: ragged rows");
        for (std::size_t j = 0; j < c; ++j) {
            if (cells[i][j].size() != l)
                throw ValidationError("PolyMatrix::parse: entry '" + cells[i][j] +
                                      "' does not have l=" + std::to_string(l) + " bits");
            m.at(i, j) = CirculantPoly::from_string(cells[i][j]);
        }
    }
    return m;
}

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t l) {
    PolyMatrix m(n, n, l);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = CirculantPoly::one(l);
    return m;
}

PolyMatrix PolyMatrix::kronecker(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.l != b.l)
        throw ValidationError("PolyMatrix::kronecker: mismatched l");
    PolyMatrix m(a.rows * b.rows, a.cols * b.cols, a.l);
    for (std::size_t ia = 0; ia < a.rows; ++ia)
        for (std::size_t ja = 0; ja < a.cols; ++ja) {
            if (a.at(ia, ja).is_zero())
                continue;
            for (std::size_t ib = 0; ib < b.rows; ++ib)
                for (std::size_t jb = 0; jb < b.cols; ++jb)
                    m.at(ia * b.rows + ib, ja * b.cols + jb) =
                        poly_mul(a.at(ia, ja), b.at(ib, jb));
        }
    return m;
}

PolyMatrix PolyMatrix::hconcat(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows != b.rows || a.l != b.l)
        throw ValidationError("PolyMatrix::hconcat: shape mismatch");
    PolyMatrix m(a.rows, a.cols + b.cols, a.l);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j)
            m.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols; ++j)
            m.at(i, a.cols + j) = b.at(i, j);
    }
    return m;
}

PolyMatrix PolyMatrix::multiply(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols != b.rows || a.l != b.l)
        throw ValidationError("PolyMatrix::multiply: shape mismatch");
    PolyMatrix m(a.rows, b.cols, a.l);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) {
            CirculantPoly acc = CirculantPoly::zero(a.l);
            for (std::size_t t = 0; t < a.cols; ++t)
                acc = poly_add(acc, poly_mul(a.at(i, t), b.at(t, j)));
            m.at(i, j) = acc;
        }
    return m;
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix m(cols, rows, l);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(j, i) = poly_transpose(at(i, j));
    return m;
}

bool PolyMatrix::is_zero() const {
    for (const auto& e : entries)
        if (!e.is_zero())
            return false;
    return true;
}

BitMatrix PolyMatrix::lift() const {
    BitMatrix m(rows * l, cols * l);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const CirculantPoly& p = at(i, j);
            for (std::size_t t = 0; t < l; ++t) {
                if (!p.coeffs.get(t))
                    continue;
                for (std::size_t c = 0; c < l; ++c)
                    m.set(i * l + (t + c) % l, j * l + c, true);
            }
        }
    return m;
}

StabilizerCode lifted_product(const PolyMatrix& a1, const PolyMatrix& a2) {
    if (a1.l != a2.l)
        throw ValidationError("lifted_product: component matrices have different l");
    const std::size_t l = a1.l;
    const std::size_t m1 = a1.rows, n1 = a1.cols, m2 = a2.rows, n2 = a2.cols;

    const PolyMatrix hx_poly =
        PolyMatrix::hconcat(PolyMatrix::kronecker(a1, PolyMatrix::identity(m2, l)),
                            PolyMatrix::kronecker(PolyMatrix::identity(m1, l), a2));
    const PolyMatrix hz_poly =
        PolyMatrix::hconcat(PolyMatrix::kronecker(PolyMatrix::identity(n1, l), a2.transposed()),
                            PolyMatrix::kronecker(a1.transposed(), PolyMatrix::identity(n2, l)));

    if (!PolyMatrix::multiply(hx_poly, hz_poly.transposed()).is_zero())
        throw ValidationError("lifted_product: CSS constraint fails over R_l");

    const std::size_t n = l * (n1 * m2 + m1 * n2);
    const BitMatrix hx_bin = hx_poly.lift();
    const BitMatrix hz_bin = hz_poly.lift();
    BitMatrix hx = BitMatrix::vconcat(hx_bin, BitMatrix(hz_bin.rows(), n));
    BitMatrix hz = BitMatrix::vconcat(BitMatrix(hx_bin.rows(), n), hz_bin);
    // validate() re-asserts the commutation constraint on the lifted matrices.
    return StabilizerCode::validate(CheckMatrix(std::move(hx), std::move(hz)),
                                    /*allow_redundant=*/true);
}

namespace {

// Outer single-qubit letters replaced by inner logicals, phases tracked by
// the Pauli product.
PauliOperator lift_operator(const PauliOperator& op, const StabilizerCode& inner,
                            std::size_t outer_n) {
    const std::size_t ni = inner.n();
    const auto& [xbar, zbar] = inner.logical_pairs()[0];
    PauliOperator out(outer_n * ni);
    for (std::size_t q = 0; q < outer_n; ++q) {
        if (!op.x_bit(q) && !op.z_bit(q))
            continue;
        PauliOperator block(ni);
        if (op.x_bit(q))
            block = multiply(block, xbar);
        if (op.z_bit(q))
            block = multiply(block, zbar);
        for (std::size_t t = 0; t < ni; ++t) {
            out.set_x(q * ni + t, block.x_bit(t));
            out.set_z(q * ni + t, block.z_bit(t));
        }
    }
    return out;
}

} // namespace

StabilizerCode concatenate(const StabilizerCode& outer, const StabilizerCode& inner) {
    if (inner.k() != 1)
        throw ValidationError("concatenate: inner code must encode exactly one logical qubit");
    for (std::size_t i = 0; i < outer.r(); ++i)
        for (std::size_t q = 0; q < outer.n(); ++q)
            if (outer.check().hx.get(i, q) && outer.check().hz.get(i, q))
                throw ValidationError("concatenate: outer generator " + std::to_string(i) +
                                      " acts as Y on qubit " + std::to_string(q + 1) +
                                      "; only I/X/Z letters are supported");

    const std::size_t no = outer.n(), ni = inner.n();
    const std::size_t n = no * ni;
    const std::size_t rows = no * inner.r() + outer.r();
    BitMatrix hx(rows, n), hz(rows, n);
    std::size_t row = 0;
    for (std::size_t b = 0; b < no; ++b)
        for (std::size_t g = 0; g < inner.r(); ++g, ++row)
            for (std::size_t t = 0; t < ni; ++t) {
                if (inner.check().hx.get(g, t))
                    hx.set(row, b * ni + t, true);
                if (inner.check().hz.get(g, t))
                    hz.set(row, b * ni + t, true);
            }
    for (std::size_t g = 0; g < outer.r(); ++g, ++row) {
        const PauliOperator lifted = lift_operator(outer.generator(g), inner, no);
        for (std::size_t q = 0; q < n; ++q) {
            if (lifted.x_bit(q))
                hx.set(row, q, true);
            if (lifted.z_bit(q))
                hz.set(row, q, true);
        }
    }

    std::vector<std::pair<PauliOperator, PauliOperator>> pairs;
    pairs.reserve(outer.k());
    for (const auto& [xb, zb] : outer.logical_pairs())
        pairs.emplace_back(lift_operator(xb, inner, no), lift_operator(zb, inner, no));

    return StabilizerCode::validate_with_logicals(CheckMatrix(std::move(hx), std::move(hz)),
                                                  std::move(pairs),
                                                  /*allow_redundant=*/true);
}

} // namespace qecstab::codes
