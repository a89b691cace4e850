#pragma once

// Test-only oracles, kept independent of the library's computation paths:
// dense Kronecker-product Pauli matrices, naive integer-matrix GF(2) algebra,
// and exhaustive brute-force searches at desk scale.

#include "qecstab/pauli.hpp"
#include "qecstab/rng.hpp"
#include "qecstab/stabilizer.hpp"

#include <Eigen/Dense>

#include <vector>

namespace oracles {

using IntMat = std::vector<std::vector<int>>;

// Dense complex matrix of i^phase * prod_j i^{x_j z_j} X^{x_j} Z^{z_j} built
// by explicit 2x2 Kronecker products (qubit 0 is the leftmost factor).
Eigen::MatrixXcd dense_pauli(const qecstab::PauliOperator& p);

// Plain Gaussian elimination over small int matrices.
std::size_t naive_rank(IntMat m);

// Membership by enumerating all 2^rows row combinations (rows <= 20).
bool naive_in_rowspace(const IntMat& m, const std::vector<int>& v);

IntMat to_int_matrix(const qecstab::gf2::BitMatrix& m);
std::vector<int> to_int_vector(const qecstab::gf2::BitVector& v);

// Exhaustive minimum distance over all 4^n Paulis (n <= 10): least weight of
// a zero-syndrome operator outside the generator rowspace. Returns 0 if none.
std::size_t exhaustive_min_distance(const qecstab::StabilizerCode& code);

// Uniformly random Pauli with phase 0.
qecstab::PauliOperator random_pauli(std::size_t n, qecstab::Philox& rng);

} // namespace oracles
