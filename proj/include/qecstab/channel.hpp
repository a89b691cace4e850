#pragma once

#include "qecstab/pauli.hpp"
#include "qecstab/rng.hpp"

namespace qecstab {

// Single-qubit Pauli error distribution. Applied i.i.d. per qubit.
struct PauliChannel {
    double p_i = 1.0, p_x = 0.0, p_y = 0.0, p_z = 0.0;

    // Throws unless all probabilities are nonnegative and sum to 1 within 1e-12.
    static PauliChannel make(double pi, double px, double py, double pz);

    // Marginal probability that a qubit picks up an X (resp. Z) component.
    double x_marginal() const { return p_x + p_y; }
    double z_marginal() const { return p_z + p_y; }
};

// (1-eps, eps/3, eps/3, eps/3); eps restricted to [0, 3/4] so the per-letter
// weights stay valid probabilities.
PauliChannel depolarizing(double eps);
// (1-eps, eps, 0, 0)
PauliChannel bit_flip(double eps);
// (1-eps, 0, 0, eps)
PauliChannel dephasing(double eps);

// i.i.d. sample: each qubit draws I/X/Y/Z by inverse CDF in the fixed order
// I < X < Y < Z; the result carries phase 0.
PauliOperator sample_error(const PauliChannel& ch, std::size_t n, Philox& rng);

} // namespace qecstab
