#pragma once

#include "qecstab/channel.hpp"
#include "qecstab/stabilizer.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace qecstab {

// Bipartite check/variable adjacency of a parity-check matrix, in CSR form.
// Edge e is the e-th (check, var) incidence in row-major order.
struct TannerGraph {
    std::size_t check_count = 0, var_count = 0;
    std::vector<std::size_t> check_offsets; // size check_count + 1
    std::vector<std::size_t> check_vars;    // var index per edge
    std::vector<std::size_t> var_offsets;   // size var_count + 1
    std::vector<std::size_t> var_edges;     // edge index per (var, check) incidence
    std::vector<std::size_t> var_checks;    // check index per incidence

    TannerGraph() = default;
    explicit TannerGraph(const gf2::BitMatrix& h);

    std::size_t edge_count() const { return check_vars.size(); }
};

enum class BpVariant { SumProduct, MinSum };

struct BpOptions {
    int max_iter = 100;
    BpVariant variant = BpVariant::SumProduct;
    double min_sum_norm = 0.75;
};

struct BpResult {
    gf2::BitVector estimate;
    bool converged = false;
    int iterations = 0;
};

// Flooding LLR belief propagation / normalized min-sum with syndrome-adjusted
// check nodes. After every iteration the hard decision is tested against the
// syndrome; stops early on success. A marginal of exactly 0 decides "no
// error". prior must lie in (0, 1/2).
BpResult bp_decode(const TannerGraph& g, const gf2::BitVector& syndrome, double prior,
                   const BpOptions& opts = {});

struct DecodeResult {
    PauliOperator estimate;
    bool converged = false; // the estimate reproduces the input syndrome
    int iterations = 0;
};

// Uniform decoder interface for the Monte Carlo harness. Implementations are
// immutable after construction; decode() keeps no mutable shared state.
class Decoder {
public:
    virtual ~Decoder() = default;
    virtual DecodeResult decode(const gf2::BitVector& syndrome) const = 0;
    virtual const char* name() const = 0;
};

// Exhaustive maximum-likelihood coset decoder: for every attainable syndrome,
// scores each logical coset E + L + S by its total channel probability and
// stores a minimum-weight member of the winning coset. Guards: n <= 14 and
// r <= 16. Near-ties are re-scored in exact dyadic arithmetic for n <= 10.
class MlCosetDecoder : public Decoder {
public:
    MlCosetDecoder(const StabilizerCode& code, const PauliChannel& ch);
    DecodeResult decode(const gf2::BitVector& syndrome) const override;
    const char* name() const override { return "mlcoset"; }

private:
    std::size_t n_, r_;
    std::vector<std::optional<PauliOperator>> table_; // indexed by packed syndrome
};

// Most-likely single error with the given syndrome (the non-coset rule kept
// for comparison); ties broken by lexicographic symplectic vector.
class MlErrorDecoder : public Decoder {
public:
    MlErrorDecoder(const StabilizerCode& code, const PauliChannel& ch);
    DecodeResult decode(const gf2::BitVector& syndrome) const override;
    const char* name() const override { return "mlerror"; }

private:
    std::size_t n_, r_;
    std::vector<std::optional<PauliOperator>> table_;
};

// Split-syndrome CSS decoding: BP on the X-check rows constrains the Z error
// (prior p_z + p_y), BP on the Z-check rows constrains the X error (prior
// p_x + p_y); the two estimates combine into one Pauli. X/Z correlations of
// Y errors are deliberately ignored.
class CssBpDecoder : public Decoder {
public:
    CssBpDecoder(const StabilizerCode& code, const PauliChannel& ch, const BpOptions& opts);
    DecodeResult decode(const gf2::BitVector& syndrome) const override;
    const char* name() const override {
        return opts_.variant == BpVariant::SumProduct ? "bp" : "minsum";
    }

private:
    std::size_t n_;
    std::vector<std::size_t> x_rows_, z_rows_;
    TannerGraph z_error_graph_; // hx part of the X-type rows
    TannerGraph x_error_graph_; // hz part of the Z-type rows
    double z_prior_, x_prior_;
    BpOptions opts_;
};

std::unique_ptr<Decoder> make_decoder(const std::string& name, const StabilizerCode& code,
                                      const PauliChannel& ch, const BpOptions& opts = {});

enum class TrialOutcome { Success, LogicalError };

struct ClassifiedTrial {
    TrialOutcome outcome = TrialOutcome::Success;
    ResidualClass residual = ResidualClass::Stabilizer;
    bool converged = true;
    int iterations = 0;
};

// syndrome -> decode -> residual = estimate * e -> classify. A Detectable
// residual (decoder failed to reproduce the syndrome) counts as a logical
// error for rate purposes and is tallied separately by the harness.
ClassifiedTrial decode_and_classify(const StabilizerCode& code, const PauliOperator& e,
                                    const Decoder& dec);

} // namespace qecstab
