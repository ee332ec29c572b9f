#pragma once

#include <vector>

#include "sharp/hs.hpp"
#include "sharp/jordan.hpp"

namespace sharp {

/// A ≤# B: A² = AB = BA. Both arguments must have index ≤ 1
/// (IndexTooLarge otherwise). Mixed modes are compared in floating point.
bool sharp_leq(const Matrix& a, const Matrix& b, const Tolerance& tol = {});

/// Projector order T1 ≤ T2: T1 = T1·T2 = T2·T1.
bool proj_leq(const Matrix& t1, const Matrix& t2, const Tolerance& tol = {});

/// T² = T and T commutes with m.
bool is_commuting_projector(const Matrix& t, const Matrix& m, const Tolerance& tol = {});

/// The projector T of ΣK representing a predecessor A of B. Validated by
/// reconstruction; NotAPredecessor when A is not below B.
Matrix phi(const Matrix& a, const HSDecomposition& hs, const Tolerance& tol = {});

/// A = U·[[TΣK, TΣL], [O, O]]·U*. NotInTau unless T is a projector
/// commuting with ΣK.
Matrix phi_inv(const Matrix& t, const HSDecomposition& hs, const Tolerance& tol = {});

/// P·T·P⁻¹ and its inverse map P⁻¹·T·P.
Matrix psi(const Matrix& t, const Matrix& p, const Tolerance& tol = {});
Matrix psi_inv(const Matrix& t, const Matrix& p, const Tolerance& tol = {});

/// Group inverse of phi_inv(T) from (TΣK)# = (ΣK)⁻¹T.
Matrix predecessor_group_inverse(const Matrix& t, const HSDecomposition& hs, const Tolerance& tol = {});

/// For B = P·diag(J, O)·P⁻¹ with one Jordan block per eigenvalue: all 2^s
/// predecessors P·diag(D_1, ..., D_s, O)·P⁻¹ with D_i ∈ {O, J_i}. Element
/// number m includes J_i exactly when bit i of m is set.
/// MultiplicityExceedsOne if some eigenvalue has several blocks.
std::vector<Matrix> jordan_predecessors(const Matrix& p, const JordanSpec& spec, std::size_t n);

/// The predecessor P·diag(TJ, O)·P⁻¹ of B = P·diag(J, O)·P⁻¹ for a
/// projector T commuting with J. Exact whenever P and T are.
Matrix jordan_predecessor(const Matrix& p, const JordanSpec& spec, const Matrix& t, std::size_t n);

/// B = I₃ and A = [[0,1,0],[0,1,0],[0,0,0]]: A ≤# B although A is none of the
/// eight matrices diag(D_1, D_2, D_3) with D_i ∈ {0, 1}.
struct ConjectureReport {
    Matrix b;
    Matrix a;
    bool leq = false;
    bool diagonal_form = true;
    std::vector<Matrix> block_forms;
};
ConjectureReport conjecture_refutation();

/// B = P·diag(J, X)·P⁻¹ for A = P·diag(J, O)·P⁻¹. The form is necessary for
/// A ≤# B but not sufficient, so leq is checked separately (false when X has
/// index above 1).
struct SuccessorForm {
    Matrix b;
    bool x_index_le_one = false;
    bool leq = false;
};
SuccessorForm successor_form(const Matrix& a, const Matrix& p, const JordanSpec& spec, const Matrix& x,
                             const Tolerance& tol = {});

/// C = U·[[ΣK, (Σ − K⁻¹)L], [O, I]]·U*, nonsingular with B ≤# C.
/// SingularK when B has index above 1.
Matrix extend_to_nonsingular(const HSDecomposition& hs, const Tolerance& tol = {});

/// Given B = Q·diag(J, O)·Q⁻¹, the leading r×r block P of U*Q satisfies
/// ΣK = P·J·P⁻¹.
Matrix sigma_k_similarity(const HSDecomposition& hs, const Matrix& q);

}  // namespace sharp
