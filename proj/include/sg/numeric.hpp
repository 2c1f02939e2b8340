#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "sg/qmatrix.hpp"

namespace sg {

struct NotCommuting : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct JointEigenResult {
    // one entry per accepted joint eigenvector
    std::vector<std::vector<std::complex<double>>> vectors;
    // eigenvalues[k][g] = eigenvalue of generator g on vector k
    std::vector<std::vector<std::complex<double>>> eigenvalues;
    // eigenvalues of the random combination, used for the separation test
    std::vector<std::complex<double>> combo_eigenvalues;
    bool simple_spectrum = false;
};

// Approximate joint eigenvectors of an exactly-commuting family: random
// rational combination, dense eigendecomposition, per-generator residual
// check |A v - theta v| <= tol * |A| * |v|.  Throws NotCommuting when an
// exact commutator is nonzero.
JointEigenResult joint_numeric_eigen(const std::vector<QMatrix>& commuting,
                                     std::uint64_t seed, double tol);

}  // namespace sg
