#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "sharp/commutant.hpp"
#include "sharp/hs.hpp"

namespace sharp {

/// T1·T2 and T1 + T2 − T1·T2 for commuting projectors; NonCommuting otherwise.
Matrix meet_commuting(const Matrix& t1, const Matrix& t2, const Tolerance& tol = {});
Matrix join_commuting(const Matrix& t1, const Matrix& t2, const Tolerance& tol = {});

/// A1·B†·A2 for predecessors of B whose projectors commute.
Matrix matrix_meet(const Matrix& a1, const Matrix& a2, const HSDecomposition& hs, const Tolerance& tol = {});
/// phi_inv of the join of the two projectors.
Matrix matrix_join(const Matrix& a1, const Matrix& a2, const HSDecomposition& hs, const Tolerance& tol = {});

/// I − T for a projector T commuting with m (ΣK or J); NotInTau otherwise.
Matrix complement_in_downset(const Matrix& t, const Matrix& m, const Tolerance& tol = {});

enum class FactorKind { TwoChain, BoundedInfiniteAntichain, NonLatticeFactor };
std::string_view to_string(FactorKind kind);

struct DownsetFactor {
    FactorKind kind;
    Gaussian lambda;
    std::vector<std::size_t> sizes;
    /// Ranks a projector can have on this eigenvalue; filled for two blocks.
    std::set<std::size_t> ranks;
};

/// Structure of [O, B] read off the Jordan form of ΣK.
struct DownsetDescriptor {
    std::size_t s = 0;
    std::vector<DownsetFactor> factors;
    bool is_lattice = false;
    bool is_distributive = false;
    bool is_boolean = false;
    std::uint64_t boolean_center_size = 0;
    std::size_t max_chain_length = 0;
    /// Number of elements when finite (exactly the Boolean case).
    std::optional<std::uint64_t> count;
};

DownsetDescriptor classify_downset(const JordanSpec& spec);

/// The 2^s projectors diag(D_1, ..., D_s) with D_j ∈ {O, I}; element m has
/// D_j = I exactly when bit j of m is set.
std::vector<CommutantProjector> boolean_center(const JordanSpec& spec);

/// Four projectors in δ with T1, T2 < T3, T4, T1 ∥ T2 and T3 ∥ T4, so that
/// neither T1 ∨ T2 nor T3 ∧ T4 exists. Built on the first eigenvalue with at
/// least three Jordan blocks, using its three largest blocks.
struct NonLatticeWitness {
    std::size_t eigenvalue = 0;
    Matrix t1, t2, t3, t4;
};
NonLatticeWitness non_lattice_witness(const JordanSpec& spec);

struct WitnessCheck {
    bool membership[4] = {false, false, false, false};
    /// leq[i][k]: T_{i+1} ≤ T_{k+1}.
    bool leq[4][4] = {};
    bool t1_incomparable_t2 = false;
    bool t3_incomparable_t4 = false;
    std::size_t samples = 0;
    std::size_t strict_intermediates = 0;

    /// All claimed relations hold and the screen found nothing between T2 and T3.
    bool passed() const;
};

/// Verifies the witness and screens `samples` sampled δ elements for one
/// strictly between T2 and T3.
WitnessCheck verify_witness(const NonLatticeWitness& w, const JordanSpec& spec, std::size_t samples,
                            std::uint64_t seed = 0);

/// Interval [T1, T2] ≅ [O, T2 − T1]: P ↦ P + T1 and Q ↦ Q − T1.
/// PrecondViolated when the argument lies outside the source interval.
Matrix interval_iso_forward(const Matrix& p, const Matrix& t1, const Matrix& t2, const Tolerance& tol = {});
Matrix interval_iso_backward(const Matrix& q, const Matrix& t1, const Matrix& t2, const Tolerance& tol = {});

/// O ≤# A_1 ≤# ... ≤# A_l = B, one step per Jordan block of ΣK. The spec must
/// carry the r×r similarity P with ΣK = P·J·P⁻¹.
std::vector<Matrix> max_chain(const HSDecomposition& hs, const JordanSpec& spec, const Tolerance& tol = {});

/// Same chain for B = Q·diag(J, O)·Q⁻¹ in the arithmetic of Q.
std::vector<Matrix> jordan_chain(const Matrix& q, const JordanSpec& spec, std::size_t n);

/// Infimum of two 2×2 index-1 exact matrices in the sharp order.
Matrix meet_in_c2(const Matrix& b1, const Matrix& b2);

}  // namespace sharp
