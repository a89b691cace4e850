#pragma once

#include "qecstab/bitmatrix.hpp"
#include "qecstab/pauli.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qecstab {

// r stabilizer generator rows over n qubits, stored as the pair of r x n
// blocks of the check matrix H = [hx | hz]. Row i is the generator
// E(hx_i, hz_i).
struct CheckMatrix {
    std::size_t n = 0, r = 0;
    gf2::BitMatrix hx, hz;

    CheckMatrix() = default;
    CheckMatrix(gf2::BitMatrix hx_, gf2::BitMatrix hz_);

    PauliOperator generator(std::size_t i) const;
};

enum class ResidualClass { Stabilizer, Logical, Detectable };

struct DistanceOptions {
    std::size_t budget = 200'000'000; // candidate evaluations allowed
    int workers = 1;
};

struct DistanceResult {
    std::size_t distance = 0;
    PauliOperator witness; // a minimum-weight element of N(S) \ S
};

// Validated stabilizer code: parameters, syndromes, logical operator pairs,
// distance / degeneracy search, and residual classification.
class StabilizerCode {
public:
    // Checks the commutation constraint hx hz^T + hz hx^T = 0 (reporting the
    // offending row pair), computes k = n - rank[hx|hz], and extracts k
    // symplectically paired logical operators. Redundant (dependent) rows are
    // rejected unless allow_redundant is set; syndromes always keep one bit
    // per stored row.
    static StabilizerCode validate(CheckMatrix check, bool allow_redundant = false);

    // Same checks, but trusts the caller-supplied logical pairs after
    // verifying the pairing invariants (used by code constructors that carry
    // logicals structurally, e.g. concatenation).
    static StabilizerCode validate_with_logicals(
        CheckMatrix check, std::vector<std::pair<PauliOperator, PauliOperator>> pairs,
        bool allow_redundant = false);

    std::size_t n() const { return check_.n; }
    std::size_t k() const { return k_; }
    std::size_t r() const { return check_.r; }
    std::size_t rank() const { return rank_; }
    const CheckMatrix& check() const { return check_; }
    PauliOperator generator(std::size_t i) const { return check_.generator(i); }

    const std::vector<std::pair<PauliOperator, PauliOperator>>& logical_pairs() const {
        return logicals_;
    }

    // Bit i = symplectic product of generator i with e; phase of e is ignored.
    gf2::BitVector syndrome(const PauliOperator& e) const;

    bool in_stabilizer_group(const PauliOperator& p) const;
    ResidualClass classify_residual(const PauliOperator& p) const;

    // Least weight w <= max_weight of a zero-syndrome Pauli outside the
    // generator rowspace, enumerating 3^w C(n,w) candidates per level in
    // (weight, support, letter) order. nullopt if none up to max_weight.
    std::optional<DistanceResult> min_distance(std::size_t max_weight,
                                               const DistanceOptions& opts = {}) const;

    // True iff some nonidentity stabilizer element has Pauli weight < d.
    bool is_degenerate(std::size_t d, std::size_t budget = 200'000'000) const;

    // Row indices of pure-X-type and pure-Z-type generators when every row is
    // single-lettered (zero rows count as X-type); nullopt for mixed rows.
    struct CssSplit {
        std::vector<std::size_t> x_rows; // rows [a|0]: constrain the Z error
        std::vector<std::size_t> z_rows; // rows [0|b]: constrain the X error
    };
    const std::optional<CssSplit>& css_split() const { return css_; }

    const gf2::RowSpace& rowspace() const { return space_; }

private:
    StabilizerCode() = default;
    void finish(bool allow_redundant, bool extract);
    void verify_logicals() const;

    CheckMatrix check_;
    std::size_t k_ = 0, rank_ = 0;
    gf2::RowSpace space_; // rowspace of [hx|hz]
    std::vector<std::pair<PauliOperator, PauliOperator>> logicals_;
    std::optional<CssSplit> css_;
};

// Basis of N(S)/S paired by symplectic Gram-Schmidt; X and Z members of each
// pair anticommute, everything else commutes. Deterministic: kernel basis
// rows are processed in ascending lexicographic order.
std::vector<std::pair<PauliOperator, PauliOperator>>
extract_logicals(const CheckMatrix& check);

} // namespace qecstab
