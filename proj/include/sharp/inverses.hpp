#pragma once

#include "sharp/matrix.hpp"

namespace sharp {

/// Moore-Penrose inverse. Float: SVD with singular values above the rank
/// threshold inverted. Exact: full-rank factorization A = FG.
Matrix moore_penrose(const Matrix& a, const Tolerance& tol = {});

/// rank(A²) = rank(A).
bool index_le_one(const Matrix& a, const Tolerance& tol = {});

/// Group inverse; IndexTooLarge when A has index above 1.
Matrix group_inverse(const Matrix& a, const Tolerance& tol = {});

/// BB† = B†B.
bool is_ep(const Matrix& b, const Tolerance& tol = {});

}  // namespace sharp
