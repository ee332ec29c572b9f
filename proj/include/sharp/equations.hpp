#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sharp/commutant.hpp"
#include "sharp/hs.hpp"

namespace sharp {

/// S = U·diag(T, W)·U*, a projector commuting with the EP matrix B.
/// NotEP when L ≠ O, NotInTau for T, WNotProjector for W.
Matrix solve_ep_commute_idempotent(const HSDecomposition& hs, const Matrix& t, const Matrix& w,
                                   const Tolerance& tol = {});

/// Splits a claimed solution S back into (T, W); nullopt when S is not of
/// that form.
std::optional<std::pair<Matrix, Matrix>> decompose_ep_solution(const HSDecomposition& hs, const Matrix& s,
                                                               const Tolerance& tol = {});

/// Number of projectors commuting with B when every eigenvalue of ΣK has a
/// single Jordan block: 2^s for nonsingular B, 2^{s+1} for EP B of rank n − 1.
/// HypothesisViolated otherwise.
std::uint64_t count_solutions(const HSDecomposition& hs, const JordanSpec& spec, const Tolerance& tol = {});

/// S·B^k = B^k·S for k = 1..kmax.
bool verify_power_commute(const Matrix& s, const Matrix& b, unsigned kmax, const Tolerance& tol = {});

/// S = U·diag(T, O)·U*, which solves XBX = BX, X² = X for T in τ.
Matrix solve_xbx_family(const HSDecomposition& hs, const Matrix& t, const Tolerance& tol = {});

enum class FamilyKind { EPCommuteIdempotent, JordanCommuteIdempotent, XBXFamily };
std::string_view to_string(FamilyKind kind);

/// Projectors commuting with a nonsingular B = P·J·P⁻¹: {P·T·P⁻¹ : T ∈ δ}.
/// Finite exactly when every eigenvalue has one Jordan block, in which case
/// the members are listed; otherwise use sample() and contains().
class SolutionFamily {
public:
    SolutionFamily(FamilyKind kind, Matrix b, Matrix p, JordanSpec spec);

    FamilyKind kind() const { return kind_; }
    const Matrix& b() const { return b_; }
    const Matrix& p() const { return p_; }
    const JordanSpec& spec() const { return spec_; }
    std::size_t free_part_size() const { return spec_.r(); }
    const std::optional<std::vector<Matrix>>& members() const { return members_; }
    std::optional<std::uint64_t> finite_count() const;

    Matrix sample(std::uint64_t seed) const;
    /// S is a projector and P⁻¹·S·P commutes with J.
    bool contains(const Matrix& s, const Tolerance& tol = {}) const;

private:
    FamilyKind kind_;
    Matrix b_;
    Matrix p_;
    JordanSpec spec_;
    std::optional<std::vector<Matrix>> members_;
};

/// SingularityMismatch when B is singular or the Jordan size differs from n;
/// PrecondViolated when P·J·P⁻¹ ≠ B.
SolutionFamily solve_jordan_commuting_projectors(const Matrix& b, const Matrix& p, const JordanSpec& spec,
                                                 const Tolerance& tol = {});

}  // namespace sharp
