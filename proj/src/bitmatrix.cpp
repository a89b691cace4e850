#include "qecstab/bitmatrix.hpp"

namespace qecstab::gf2 {

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    BitMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw ValidationError("from_rows: ragged row lengths");
        for (std::size_t j = 0; j < c; ++j) {
            if (rows[i][j] == '1')
                m.set(i, j, true);
            else if (rows[i][j] != '0')
                throw ValidationError("from_rows: character other than 0/1");
        }
    }
    return m;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        const std::uint64_t* r = row(i);
        for (std::size_t wi = 0; wi < wpr_; ++wi) {
            std::uint64_t w = r[wi];
            while (w) {
                const unsigned b = static_cast<unsigned>(std::countr_zero(w));
                t.set(wi * 64 + b, i, true);
                w &= w - 1;
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::hconcat(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows_ != b.rows_)
        throw ValidationError("hconcat: row count mismatch");
    BitMatrix m(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j)
            if (a.get(i, j))
                m.set(i, j, true);
        for (std::size_t j = 0; j < b.cols_; ++j)
            if (b.get(i, j))
                m.set(i, a.cols_ + j, true);
    }
    return m;
}

BitMatrix BitMatrix::vconcat(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.cols_)
        throw ValidationError("vconcat: column count mismatch");
    BitMatrix m(a.rows_ + b.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t w = 0; w < a.wpr_; ++w)
            m.row(i)[w] = a.row(i)[w];
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t w = 0; w < b.wpr_; ++w)
            m.row(a.rows_ + i)[w] = b.row(i)[w];
    return m;
}

BitMatrix BitMatrix::kronecker(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t ia = 0; ia < a.rows_; ++ia)
        for (std::size_t ja = 0; ja < a.cols_; ++ja) {
            if (!a.get(ia, ja))
                continue;
            for (std::size_t ib = 0; ib < b.rows_; ++ib)
                for (std::size_t jb = 0; jb < b.cols_; ++jb)
                    if (b.get(ib, jb))
                        m.set(ia * b.rows_ + ib, ja * b.cols_ + jb, true);
        }
    return m;
}

BitMatrix BitMatrix::multiply(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols_ != b.rows_)
        throw ValidationError("multiply: inner dimension mismatch");
    BitMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        const std::uint64_t* r = a.row(i);
        for (std::size_t wi = 0; wi < a.wpr_; ++wi) {
            std::uint64_t w = r[wi];
            while (w) {
                const std::size_t k = wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
                kernels().xor_rows(m.row(i), b.row(k), b.wpr_);
                w &= w - 1;
            }
        }
    }
    return m;
}

BitVector BitMatrix::apply(const BitVector& v) const {
    if (v.size() != cols_)
        throw ValidationError("apply: length mismatch");
    BitVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        const std::uint64_t p = wpr_ ? kernels().and_popcount(row(i), v.data(), wpr_) : 0;
        if (p & 1)
            out.set(i, true);
    }
    return out;
}

RrefResult rref(const BitMatrix& m) {
    RrefResult res;
    res.matrix = m;
    BitMatrix& a = res.matrix;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < a.rows() && !a.get(piv, col))
            ++piv;
        if (piv == a.rows())
            continue;
        a.swap_rows(lead, piv);
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (i != lead && a.get(i, col))
                a.row_xor(i, lead);
        res.pivots.push_back(col);
        ++lead;
    }
    return res;
}

std::size_t rank(const BitMatrix& m) { return rref(m).pivots.size(); }

BitMatrix kernel(const BitMatrix& m) {
    const RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots)
        is_pivot[p] = true;
    BitMatrix k(m.cols() - r.pivots.size(), m.cols());
    std::size_t out = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        k.set(out, f, true);
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            if (r.matrix.get(i, f))
                k.set(out, r.pivots[i], true);
        ++out;
    }
    return k;
}

bool in_rowspace(const BitMatrix& m, const BitVector& v) {
    return RowSpace(m).contains(v);
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& s) {
    return LinearSolver(m).solve(s);
}

RowSpace::RowSpace(const BitMatrix& m) {
    RrefResult r = rref(m);
    rref_ = std::move(r.matrix);
    pivots_ = std::move(r.pivots);
}

bool RowSpace::contains(const BitVector& v) const {
    return !reduce(v).any();
}

BitVector RowSpace::reduce(BitVector v) const {
    if (v.size() != rref_.cols())
        throw ValidationError("rowspace reduce: length mismatch");
    reduce_words(v.data());
    return v;
}

void RowSpace::reduce_words(std::uint64_t* v) const {
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if ((v[p >> 6] >> (p & 63)) & 1)
            kernels().xor_rows(v, rref_.row(i), rref_.words_per_row());
    }
}

LinearSolver::LinearSolver(const BitMatrix& m)
    : rows_(m.rows()), cols_(m.cols()), reduced_(m), ops_(BitMatrix::identity(m.rows())) {
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
        std::size_t piv = lead;
        while (piv < rows_ && !reduced_.get(piv, col))
            ++piv;
        if (piv == rows_)
            continue;
        reduced_.swap_rows(lead, piv);
        ops_.swap_rows(lead, piv);
        for (std::size_t i = 0; i < rows_; ++i)
            if (i != lead && reduced_.get(i, col)) {
                reduced_.row_xor(i, lead);
                ops_.row_xor(i, lead);
            }
        pivots_.push_back(col);
        ++lead;
    }
}

std::optional<BitVector> LinearSolver::solve(const BitVector& s) const {
    if (s.size() != rows_)
        throw ValidationError("solve: syndrome length mismatch");
    const BitVector t = ops_.apply(s); // elimination applied to the rhs
    // Rows below the rank are all-zero; a set bit there means no solution.
    for (std::size_t i = pivots_.size(); i < rows_; ++i)
        if (t.get(i))
            return std::nullopt;
    BitVector x(cols_);
    for (std::size_t i = 0; i < pivots_.size(); ++i)
        if (t.get(i))
            x.set(pivots_[i], true);
    return x;
}

} // namespace qecstab::gf2
