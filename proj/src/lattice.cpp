#include "sharp/lattice.hpp"

#include "sharp/inverses.hpp"
#include "sharp/order.hpp"

namespace sharp {

Matrix meet_commuting(const Matrix& t1, const Matrix& t2, const Tolerance& tol) {
    Matrix x = t1, y = t2;
    unify_modes(x, y);
    if (!commutes(x, y, tol)) throw Error(ErrorCode::NonCommuting, "projectors do not commute");
    return x * y;
}

Matrix join_commuting(const Matrix& t1, const Matrix& t2, const Tolerance& tol) {
    Matrix x = t1, y = t2;
    unify_modes(x, y);
    if (!commutes(x, y, tol)) throw Error(ErrorCode::NonCommuting, "projectors do not commute");
    return x + y - x * y;
}

Matrix matrix_meet(const Matrix& a1, const Matrix& a2, const HSDecomposition& hs, const Tolerance& tol) {
    const Matrix t1 = phi(a1, hs, tol), t2 = phi(a2, hs, tol);
    if (!commutes(t1, t2, tol)) throw Error(ErrorCode::NonCommuting, "projectors of the arguments do not commute");
    return a1.to_float() * moore_penrose(hs_reconstruct(hs), tol) * a2.to_float();
}

Matrix matrix_join(const Matrix& a1, const Matrix& a2, const HSDecomposition& hs, const Tolerance& tol) {
    return phi_inv(join_commuting(phi(a1, hs, tol), phi(a2, hs, tol), tol), hs, tol);
}

Matrix complement_in_downset(const Matrix& t, const Matrix& m, const Tolerance& tol) {
    if (!is_commuting_projector(t, m, tol)) throw Error(ErrorCode::NotInTau, "T is not a projector commuting with M");
    return Matrix::identity(t.rows(), t.mode()) - t;
}

std::string_view to_string(FactorKind kind) {
    switch (kind) {
    case FactorKind::TwoChain: return "TwoChain";
    case FactorKind::BoundedInfiniteAntichain: return "BoundedInfiniteAntichain";
    case FactorKind::NonLatticeFactor: return "NonLatticeFactor";
    }
    return "Unknown";
}

DownsetDescriptor classify_downset(const JordanSpec& spec) {
    spec.validate();
    if (spec.s() >= 64) throw Error(ErrorCode::InvalidSpec, "too many eigenvalues");
    DownsetDescriptor d;
    d.s = spec.s();
    bool any_two = false, any_more = false;
    for (const auto& e : spec.eigenvalues) {
        DownsetFactor f{FactorKind::TwoChain, e.lambda, e.sizes, {}};
        if (e.count() == 2) {
            f.kind = FactorKind::BoundedInfiniteAntichain;
            f.ranks = admissible_ranks(e.sizes[0], e.sizes[1]);
            any_two = true;
        } else if (e.count() >= 3) {
            f.kind = FactorKind::NonLatticeFactor;
            any_more = true;
        }
        d.factors.push_back(std::move(f));
    }
    d.is_lattice = !any_more;
    d.is_boolean = !any_two && !any_more;
    d.is_distributive = d.is_boolean;
    d.boolean_center_size = std::uint64_t{1} << d.s;
    d.max_chain_length = spec.block_count() + 1;
    if (d.is_boolean) d.count = d.boolean_center_size;
    return d;
}

std::vector<CommutantProjector> boolean_center(const JordanSpec& spec) {
    spec.validate();
    if (spec.s() >= 20) throw Error(ErrorCode::BudgetExceeded, "Boolean center too large to list");
    std::vector<CommutantProjector> out;
    for (std::size_t m = 0; m < (std::size_t{1} << spec.s()); ++m) {
        CommutantElement e = CommutantElement::zero(spec);
        for (std::size_t j = 0; j < spec.s(); ++j) {
            if (!((m >> j) & 1)) continue;
            for (std::size_t i = 0; i < e.blocks[j].size(); ++i) e.blocks[j][i][i][0] = Gaussian(1);
        }
        out.emplace_back(std::move(e));
    }
    return out;
}

NonLatticeWitness non_lattice_witness(const JordanSpec& spec) {
    spec.validate();
    std::size_t j = 0;
    while (j < spec.s() && spec.eigenvalues[j].count() < 3) ++j;
    if (j == spec.s()) throw Error(ErrorCode::NoEligibleEigenvalue, "no eigenvalue has three or more Jordan blocks");
    const auto& sizes = spec.eigenvalues[j].sizes;
    const std::size_t r1 = sizes[0], r2 = sizes[1], r3 = sizes[2];
    const std::size_t b0 = spec.offset(j), b1 = b0 + r1, b2 = b1 + r2;
    const std::size_t r = spec.r();

    Matrix base = Matrix::zero(r, r, Mode::exact);
    for (std::size_t i = 0; i < r2; ++i) {
        base.set(b0 + i, b1 + i, Gaussian(1));  // X = [I; O]
        base.set(b1 + i, b1 + i, Gaussian(1));
    }
    NonLatticeWitness w;
    w.eigenvalue = j;
    w.t1 = base;
    w.t2 = base;
    for (std::size_t i = 0; i < r3; ++i) w.t2.set(b2 + i, b1 + (r2 - r3) + i, Gaussian(1));  // Y = [O I]
    w.t3 = base;
    for (std::size_t i = 0; i < r3; ++i) w.t3.set(b2 + i, b2 + i, Gaussian(1));
    w.t4 = w.t3;
    if (r1 == r2) {
        for (std::size_t i = 0; i < r3; ++i) {
            w.t4.set(b2 + i, b0 + (r1 - r3) + i, Gaussian(-1));  // Z = [O −I]
            w.t4.set(b2 + i, b1 + (r2 - r3) + i, Gaussian(1));   // Y
        }
    } else {
        w.t4.set(b2, b0 + r1 - 1, Gaussian(-1));
    }
    return w;
}

bool WitnessCheck::passed() const {
    for (bool m : membership)
        if (!m) return false;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const bool expected = i == k || (i < 2 && k >= 2);
            if (leq[i][k] != expected) return false;
        }
    return t1_incomparable_t2 && t3_incomparable_t4 && strict_intermediates == 0;
}

WitnessCheck verify_witness(const NonLatticeWitness& w, const JordanSpec& spec, std::size_t samples,
                            std::uint64_t seed) {
    const Matrix* ts[4] = {&w.t1, &w.t2, &w.t3, &w.t4};
    WitnessCheck c;
    for (int i = 0; i < 4; ++i) c.membership[i] = delta_membership(*ts[i], spec);
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) c.leq[i][k] = proj_leq(*ts[i], *ts[k]);
    c.t1_incomparable_t2 = !c.leq[0][1] && !c.leq[1][0];
    c.t3_incomparable_t4 = !c.leq[2][3] && !c.leq[3][2];
    for (std::size_t k = 0; k < samples; ++k) {
        const Matrix t = sample_delta_projector(spec, seed + k).matrix();
        ++c.samples;
        if (t == w.t2 || t == w.t3) continue;
        if (proj_leq(w.t2, t) && proj_leq(t, w.t3)) ++c.strict_intermediates;
    }
    return c;
}

Matrix interval_iso_forward(const Matrix& p, const Matrix& t1, const Matrix& t2, const Tolerance& tol) {
    if (!proj_leq(t1, t2, tol)) throw Error(ErrorCode::PrecondViolated, "T1 ≰ T2");
    Matrix x = p, lo = t1;
    unify_modes(x, lo);
    const Matrix gap = t2.with_mode(x.mode()) - lo;
    if (!is_projector(x, tol) || !proj_leq(x, gap, tol))
        throw Error(ErrorCode::PrecondViolated, "argument is not in [O, T2 − T1]");
    return x + lo;
}

Matrix interval_iso_backward(const Matrix& q, const Matrix& t1, const Matrix& t2, const Tolerance& tol) {
    if (!proj_leq(t1, t2, tol)) throw Error(ErrorCode::PrecondViolated, "T1 ≰ T2");
    if (!is_projector(q, tol) || !proj_leq(t1, q, tol) || !proj_leq(q, t2, tol))
        throw Error(ErrorCode::PrecondViolated, "argument is not in [T1, T2]");
    Matrix x = q, lo = t1;
    unify_modes(x, lo);
    return x - lo;
}

namespace {

std::vector<bool> prefix_mask(std::size_t blocks, std::size_t i) {
    std::vector<bool> m(blocks, false);
    for (std::size_t k = 0; k < i; ++k) m[k] = true;
    return m;
}

}  // namespace

std::vector<Matrix> max_chain(const HSDecomposition& hs, const JordanSpec& spec, const Tolerance& tol) {
    spec.validate();
    if (!spec.P) throw Error(ErrorCode::InvalidSpec, "chain construction needs the similarity P");
    if (spec.r() != hs.r) throw Error(ErrorCode::InvalidSpec, "Jordan size differs from rank(B)");
    const auto sk = sigma_k(hs, tol);
    if (!sk.nonsingular) throw Error(ErrorCode::IndexTooLarge, "B has index above 1");
    if (!validate_similarity(*spec.P, spec, sk.product, tol))
        throw Error(ErrorCode::PrecondViolated, "P·J·P⁻¹ does not match ΣK");
    std::vector<Matrix> chain;
    const std::size_t l = spec.block_count();
    for (std::size_t i = 0; i <= l; ++i) {
        const Matrix t = psi(mask_idempotent(spec, prefix_mask(l, i)), *spec.P, tol);
        chain.push_back(phi_inv(t, hs, tol));
    }
    return chain;
}

std::vector<Matrix> jordan_chain(const Matrix& q, const JordanSpec& spec, std::size_t n) {
    spec.validate();
    std::vector<Matrix> chain;
    const std::size_t l = spec.block_count();
    for (std::size_t i = 0; i <= l; ++i)
        chain.push_back(jordan_predecessor(q, spec, mask_idempotent(spec, prefix_mask(l, i)), n));
    return chain;
}

namespace {

// Rank-one predecessors μ·E_μ of a 2×2 matrix with two distinct eigenvalues
// in Q(i). A repeated eigenvalue contributes nothing here: a Jordan block has
// no nonzero proper predecessor and a scalar matrix is handled from the other
// side. Eigenvalues outside Q(i) are skipped, since a rational partner would
// then have to share both eigenprojections and coincide with this matrix.
std::vector<Matrix> rank_one_predecessors(const Matrix& x) {
    const Gaussian tr = x.exact_at(0, 0) + x.exact_at(1, 1);
    const Gaussian det = x.exact_at(0, 0) * x.exact_at(1, 1) - x.exact_at(0, 1) * x.exact_at(1, 0);
    const Gaussian disc = tr * tr - Gaussian(4) * det;
    if (disc.is_zero()) return {};
    const auto root = disc.exact_sqrt();
    if (!root) return {};
    const Gaussian half(Rational(1, 2));
    const Gaussian mu = (tr + *root) * half, nu = (tr - *root) * half;
    const Matrix id = Matrix::identity(2, Mode::exact);
    return {(mu / (mu - nu)) * (x - nu * id), (nu / (nu - mu)) * (x - mu * id)};
}

}  // namespace

Matrix meet_in_c2(const Matrix& b1, const Matrix& b2) {
    if (b1.mode() != Mode::exact || b2.mode() != Mode::exact)
        throw Error(ErrorCode::NotSupported, "the 2×2 meet is computed in exact mode only");
    if (b1.rows() != 2 || b1.cols() != 2 || b2.rows() != 2 || b2.cols() != 2)
        throw Error(ErrorCode::ShapeMismatch, "meet_in_c2 needs 2×2 matrices");
    if (b1 == b2) return b1;
    if (sharp_leq(b1, b2)) return b1;
    if (sharp_leq(b2, b1)) return b2;
    const Matrix zero = Matrix::zero(2, 2, Mode::exact);
    // A rank-one matrix has no nonzero predecessor besides itself.
    if (rank(b1) < 2 || rank(b2) < 2) return zero;
    std::vector<Matrix> found;
    auto consider = [&](const Matrix& a, const Matrix& other) {
        if (!sharp_leq(a, other)) return;
        for (const auto& f : found)
            if (f == a) return;
        found.push_back(a);
    };
    for (const auto& a : rank_one_predecessors(b1)) consider(a, b2);
    for (const auto& a : rank_one_predecessors(b2)) consider(a, b1);
    if (found.size() > 1) throw Error(ErrorCode::InvariantViolated, "several rank-one common lower bounds");
    return found.empty() ? zero : found.front();
}

}  // namespace sharp
