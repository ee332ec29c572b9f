#pragma once

#include <optional>
#include <vector>

#include "sharp/matrix.hpp"

namespace sharp {

/// Jordan blocks belonging to one eigenvalue, largest first.
struct EigenBlocks {
    Gaussian lambda;
    std::vector<std::size_t> sizes;

    std::size_t total() const;
    std::size_t count() const { return sizes.size(); }
};

/// Jordan structure J = diag(J(λ_1), ..., J(λ_s)) of a nonsingular matrix,
/// optionally with a similarity P. P is r×r when it relates J to ΣK, or n×n
/// when it relates diag(J, O) to B itself; functions taking a spec state
/// which one they expect.
struct JordanSpec {
    std::vector<EigenBlocks> eigenvalues;
    std::optional<Matrix> P;

    std::size_t s() const { return eigenvalues.size(); }
    std::size_t r() const;
    std::size_t block_count() const;
    /// Row offset of eigenvalue j's diagonal block inside J.
    std::size_t offset(std::size_t j) const;

    /// InvalidSpec on zero or repeated eigenvalues, empty or non-descending
    /// size lists, or a non-square P.
    void validate() const;
};

Matrix jordan_block(const Gaussian& lambda, std::size_t size);
Matrix build_jordan_matrix(const JordanSpec& spec, Mode mode = Mode::exact);

/// Recovers block sizes from the ranks of (M − λI)^k for each candidate.
/// Throws ZeroEigenvalue for a zero candidate or singular M, and
/// IncompleteSpectrum when the candidates miss part of the spectrum or name a
/// non-eigenvalue.
JordanSpec weyr_structure(const Matrix& m, const std::vector<Gaussian>& candidates);

/// P nonsingular and P·J·P⁻¹ ≈ M.
bool validate_similarity(const Matrix& p, const JordanSpec& spec, const Matrix& m, const Tolerance& tol = {});

}  // namespace sharp
