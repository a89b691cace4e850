#pragma once

#include "qecstab/bitvec.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qecstab::gf2 {

// Row-major packed binary matrix. 0xc and rx0 shapes are legal. Row padding
// bits are always zero.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_(BitVector::word_count(cols)),
          w_(rows * wpr_, 0) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t r, std::size_t c) const {
        return (w_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(std::size_t r, std::size_t c, bool b) {
        const std::uint64_t m = std::uint64_t(1) << (c & 63);
        if (b)
            w_[r * wpr_ + (c >> 6)] |= m;
        else
            w_[r * wpr_ + (c >> 6)] &= ~m;
    }

    const std::uint64_t* row(std::size_t r) const { return w_.data() + r * wpr_; }
    std::uint64_t* row(std::size_t r) { return w_.data() + r * wpr_; }
    const std::uint64_t* data() const { return w_.data(); }

    BitVector row_vector(std::size_t r) const {
        BitVector v(cols_);
        for (std::size_t i = 0; i < wpr_; ++i)
            v.data()[i] = row(r)[i];
        return v;
    }
    void set_row(std::size_t r, const BitVector& v) {
        if (v.size() != cols_)
            throw ValidationError("set_row: length mismatch");
        for (std::size_t i = 0; i < wpr_; ++i)
            row(r)[i] = v.data()[i];
    }

    void row_xor(std::size_t dst, std::size_t src) {
        kernels().xor_rows(row(dst), row(src), wpr_);
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t i = 0; i < wpr_; ++i)
            std::swap(row(a)[i], row(b)[i]);
    }
    bool row_is_zero(std::size_t r) const {
        for (std::size_t i = 0; i < wpr_; ++i)
            if (row(r)[i])
                return false;
        return true;
    }

    BitMatrix transposed() const;

    // [a | b] side by side (same row count).
    static BitMatrix hconcat(const BitMatrix& a, const BitMatrix& b);
    // a stacked on top of b (same column count).
    static BitMatrix vconcat(const BitMatrix& a, const BitMatrix& b);
    // Kronecker product.
    static BitMatrix kronecker(const BitMatrix& a, const BitMatrix& b);
    // a * b over GF(2).
    static BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);

    // m * v^T
    BitVector apply(const BitVector& v) const;

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.w_ == b.w_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> w_;
};

struct RrefResult {
    BitMatrix matrix;                // reduced row-echelon form, zero rows last
    std::vector<std::size_t> pivots; // strictly increasing pivot columns
};

RrefResult rref(const BitMatrix& m);
std::size_t rank(const BitMatrix& m);

// Rows form a basis of the right null space, one per free column in ascending
// column order; empty (0 x cols) when the matrix has full column rank.
BitMatrix kernel(const BitMatrix& m);

bool in_rowspace(const BitMatrix& m, const BitVector& v);

// Any x with m * x^T = s, or nullopt when the system is inconsistent.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& s);

// Precomputed reduction against a fixed rowspace; reusable across many
// membership queries.
class RowSpace {
public:
    RowSpace() = default;
    explicit RowSpace(const BitMatrix& m);

    std::size_t rank() const { return pivots_.size(); }
    std::size_t cols() const { return rref_.cols(); }
    const BitMatrix& basis() const { return rref_; } // first rank() rows

    bool contains(const BitVector& v) const;
    // v reduced modulo the rowspace (canonical coset representative).
    BitVector reduce(BitVector v) const;
    // In-place variant on raw words of a cols()-bit vector.
    void reduce_words(std::uint64_t* v) const;

private:
    BitMatrix rref_;
    std::vector<std::size_t> pivots_;
};

// Repeated syndrome-style solves against a fixed matrix: records the row
// operations of the elimination so each solve is one matrix-vector product.
class LinearSolver {
public:
    explicit LinearSolver(const BitMatrix& m);
    std::optional<BitVector> solve(const BitVector& s) const;

private:
    std::size_t rows_, cols_;
    BitMatrix reduced_;                  // rref of m
    BitMatrix ops_;                      // rows x rows, reduced_ = ops_ * m
    std::vector<std::size_t> pivots_;
};

} // namespace qecstab::gf2
