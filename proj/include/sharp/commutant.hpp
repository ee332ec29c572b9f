#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "sharp/jordan.hpp"
#include "sharp/random.hpp"

namespace sharp {

/// Coefficients a_1..a_m of a_1·I + a_2·N + ... + a_m·N^{m-1}, N the
/// nilpotent shift; the expansion is upper triangular Toeplitz.
using RutmCoeffs = std::vector<Gaussian>;

Matrix rutm_matrix(const RutmCoeffs& coeffs);

/// Cullen block of shape rows × cols around a RUTM core of size
/// min(rows, cols): core stacked over zeros when rows > cols, zeros left of
/// the core when rows < cols, the core itself when square.
Matrix cullen_block(std::size_t rows, std::size_t cols, const RutmCoeffs& core);

/// A matrix commuting with J, stored per eigenvalue as a t_j × t_j grid of
/// Cullen block cores: blocks[j][i][k] is the core of block (i, k).
struct CommutantElement {
    JordanSpec spec;
    std::vector<std::vector<std::vector<RutmCoeffs>>> blocks;

    static CommutantElement zero(const JordanSpec& spec);
    static CommutantElement identity(const JordanSpec& spec);
    /// Reads the block cores out of T; NotInCommutant if T does not have the
    /// Cullen structure (exact mode only).
    static CommutantElement from_matrix(const Matrix& t, const JordanSpec& spec);

    /// ShapeMismatch when the grid does not fit the spec.
    void check_shape() const;
    Matrix expand() const;
};

/// A commutant element that is idempotent.
class CommutantProjector {
public:
    /// NotAProjector unless the expansion squares to itself.
    explicit CommutantProjector(CommutantElement element);
    static CommutantProjector from_matrix(const Matrix& t, const JordanSpec& spec);

    const CommutantElement& element() const { return element_; }
    const JordanSpec& spec() const { return element_.spec; }
    const Matrix& matrix() const { return matrix_; }

private:
    CommutantElement element_;
    Matrix matrix_;
};

/// All idempotent RUTMs of the given size, found by solving the coefficient
/// recursion of X² = X; always {O, I}.
std::vector<RutmCoeffs> rutm_idempotents(std::size_t size);

/// Possible ranks of a projector commuting with J for one eigenvalue with
/// two blocks of sizes q ≥ p.
std::set<std::size_t> admissible_ranks(std::size_t q, std::size_t p);

/// T² = T and TJ = JT.
bool delta_membership(const Matrix& t, const JordanSpec& spec, const Tolerance& tol = {});

/// I + (random commutant element with Gaussian-integer coefficients in
/// [-2, 2]), redrawn until nonsingular. With classes given (one label per
/// Jordan block, in spec order), Cullen blocks linking differently labelled
/// Jordan blocks are zero, so the result commutes with every block-mask
/// idempotent that is constant on each class.
Matrix random_commutant_unit(const JordanSpec& spec, Rng& rng, const std::vector<int>* classes = nullptr);

/// diag over Jordan blocks of I (mask bit set) or O.
Matrix mask_idempotent(const JordanSpec& spec, const std::vector<bool>& mask);

/// T = S·E·S⁻¹ with S from random_commutant_unit and E = mask_idempotent.
/// S is drawn first, so one seed with different masks yields projectors that
/// share S and therefore commute. Without a mask one is drawn at random.
CommutantProjector sample_delta_projector(const JordanSpec& spec, std::uint64_t seed,
                                          const std::optional<std::vector<bool>>& mask = std::nullopt);

}  // namespace sharp
