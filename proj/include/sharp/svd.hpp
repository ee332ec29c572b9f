#pragma once

#include <vector>

#include "sharp/matrix.hpp"

namespace sharp {

/// M = U·diag(sigma)·V* with U (m×m) and V (n×n) unitary, sigma descending,
/// length min(m, n).
struct SingularValueDecomposition {
    Matrix U;
    std::vector<double> sigma;
    Matrix V;
};

/// One-sided Jacobi SVD. Float mode only (ExactNotSupported otherwise).
/// The first component of each right singular vector with modulus above
/// 1e-12 is made real and positive, and the matching left vector is
/// rescaled with it.
SingularValueDecomposition svd(const Matrix& m);

}  // namespace sharp
