#pragma once

#include <vector>

#include "sharp/matrix.hpp"

namespace sharp {

/// B = U·[[ΣK, ΣL], [O, O]]·U* with U unitary, Σ = diag(sigma) the positive
/// singular values of B, and KK* + LL* = I_r.
struct HSDecomposition {
    Matrix U;
    std::vector<double> sigma;
    Matrix K;
    Matrix L;
    std::size_t r = 0;

    std::size_t n() const { return U.rows(); }
    Matrix sigma_matrix() const;
};

/// Float-mode decomposition built from the SVD of B. ZeroMatrix for B = O.
HSDecomposition hs_decompose(const Matrix& b, const Tolerance& tol = {});

Matrix hs_reconstruct(const HSDecomposition& d);

struct SigmaK {
    Matrix product;
    bool nonsingular = false;
};

/// ΣK and whether it is invertible, which holds exactly when B has index ≤ 1.
SigmaK sigma_k(const HSDecomposition& d, const Tolerance& tol = {});

/// Checks the structural invariants of a decomposition within tol.
bool hs_valid(const HSDecomposition& d, const Tolerance& tol = {});

}  // namespace sharp
