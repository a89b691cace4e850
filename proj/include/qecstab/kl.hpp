#pragma once

#include "qecstab/stabilizer.hpp"

#include <complex>
#include <vector>

namespace qecstab {

struct KlResult {
    bool pass = false;
    // c[i*m + j] for m = errors.size(); Hermitian whenever pass is true.
    std::vector<std::complex<double>> c;
    std::size_t m = 0;
    double max_deviation = 0.0; // worst entrywise |P Ei' Ej P - c P|
};

// Dense Knill-Laflamme check: builds the codespace projector
// P = prod_i (I + S_i)/2 as a 2^n x 2^n complex matrix straight from the
// generator rows, then tests P Ei^dag Ej P = c_ij P for every error pair.
// Entirely independent of the symplectic machinery; this is the oracle side
// of the dual route.
//
// Guards: n <= 12 (dense construction). Throws if P fails the projector
// checks (trace 2^k, P^2 = P), which signals an inconsistent generator set.
KlResult kl_check(const StabilizerCode& code, const std::vector<PauliOperator>& errors,
                  double tol = 1e-9);

} // namespace qecstab
