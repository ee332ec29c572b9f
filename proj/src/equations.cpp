#include "sharp/equations.hpp"

#include <algorithm>

#include "sharp/inverses.hpp"
#include "sharp/lattice.hpp"
#include "sharp/order.hpp"

namespace sharp {

namespace {

bool l_vanishes(const HSDecomposition& hs, const Tolerance& tol) {
    return hs.L.empty() || hs.L.frobenius_norm() <= tol.rel * std::max(1.0, hs.K.frobenius_norm());
}

void require_t(const Matrix& t, const HSDecomposition& hs, const Tolerance& tol) {
    if (!t.is_square() || t.rows() != hs.r) throw Error(ErrorCode::ShapeMismatch, "T must be r × r");
    if (!is_commuting_projector(t, sigma_k(hs, tol).product, tol))
        throw Error(ErrorCode::NotInTau, "T is not a projector commuting with ΣK");
}

Matrix conjugate_diag(const HSDecomposition& hs, const Matrix& t, const Matrix& w) {
    const std::size_t n = hs.n(), r = hs.r;
    Matrix core = Matrix::zero(n, n, Mode::floating);
    core.set_block(0, 0, t.to_float());
    if (r < n) core.set_block(r, r, w.to_float());
    return hs.U * core * hs.U.adjoint();
}

}  // namespace

Matrix solve_ep_commute_idempotent(const HSDecomposition& hs, const Matrix& t, const Matrix& w,
                                   const Tolerance& tol) {
    if (!l_vanishes(hs, tol)) throw Error(ErrorCode::NotEP, "B is not EP (L ≠ O)");
    require_t(t, hs, tol);
    const std::size_t m = hs.n() - hs.r;
    if (!w.is_square() || w.rows() != m) throw Error(ErrorCode::ShapeMismatch, "W must be (n − r) × (n − r)");
    if (m > 0 && !is_projector(w, tol)) throw Error(ErrorCode::WNotProjector, "W is not idempotent");
    return conjugate_diag(hs, t, w);
}

std::optional<std::pair<Matrix, Matrix>> decompose_ep_solution(const HSDecomposition& hs, const Matrix& s,
                                                               const Tolerance& tol) {
    const std::size_t n = hs.n(), r = hs.r;
    if (!s.is_square() || s.rows() != n) throw Error(ErrorCode::ShapeMismatch, "S must be n × n");
    const Matrix m = hs.U.adjoint() * s.to_float() * hs.U;
    const Matrix t = m.block(0, 0, r, r), w = m.block(r, r, n - r, n - r);
    const Matrix rebuilt = conjugate_diag(hs, t, w);
    if (!approx_eq(rebuilt, s.to_float(), tol)) return std::nullopt;
    if (!is_commuting_projector(t, sigma_k(hs, tol).product, tol)) return std::nullopt;
    if (n > r && !is_projector(w, tol)) return std::nullopt;
    return std::make_pair(t, w);
}

std::uint64_t count_solutions(const HSDecomposition& hs, const JordanSpec& spec, const Tolerance& tol) {
    spec.validate();
    if (spec.r() != hs.r) throw Error(ErrorCode::InvalidSpec, "Jordan size differs from rank(B)");
    for (const auto& e : spec.eigenvalues)
        if (e.count() != 1) throw Error(ErrorCode::HypothesisViolated, "an eigenvalue has several Jordan blocks");
    if (spec.s() >= 63) throw Error(ErrorCode::HypothesisViolated, "count does not fit");
    const std::uint64_t base = std::uint64_t{1} << spec.s();
    if (hs.r == hs.n()) return base;
    if (hs.r + 1 == hs.n() && l_vanishes(hs, tol)) return base << 1;
    throw Error(ErrorCode::HypothesisViolated, "B is neither nonsingular nor EP of rank n − 1");
}

bool verify_power_commute(const Matrix& s, const Matrix& b, unsigned kmax, const Tolerance& tol) {
    require_square(s, "verify_power_commute");
    require_same_shape(s, b, "verify_power_commute");
    Matrix x = s, y = b;
    unify_modes(x, y);
    Matrix pw = y;
    for (unsigned k = 1; k <= kmax; ++k) {
        if (!commutes(x, pw, tol)) return false;
        pw = pw * y;
    }
    return true;
}

Matrix solve_xbx_family(const HSDecomposition& hs, const Matrix& t, const Tolerance& tol) {
    require_t(t, hs, tol);
    return conjugate_diag(hs, t, Matrix::zero(hs.n() - hs.r, hs.n() - hs.r, Mode::floating));
}

std::string_view to_string(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::EPCommuteIdempotent: return "EPCommuteIdempotent";
    case FamilyKind::JordanCommuteIdempotent: return "JordanCommuteIdempotent";
    case FamilyKind::XBXFamily: return "XBXFamily";
    }
    return "Unknown";
}

SolutionFamily::SolutionFamily(FamilyKind kind, Matrix b, Matrix p, JordanSpec spec)
    : kind_(kind), b_(std::move(b)), p_(std::move(p)), spec_(std::move(spec)) {
    bool finite = true;
    for (const auto& e : spec_.eigenvalues) finite = finite && e.count() == 1;
    if (!finite) return;
    std::vector<Matrix> list;
    for (const auto& c : boolean_center(spec_)) list.push_back(psi(c.matrix(), p_));
    members_ = std::move(list);
}

std::optional<std::uint64_t> SolutionFamily::finite_count() const {
    if (!members_) return std::nullopt;
    return members_->size();
}

Matrix SolutionFamily::sample(std::uint64_t seed) const {
    return psi(sample_delta_projector(spec_, seed).matrix(), p_);
}

bool SolutionFamily::contains(const Matrix& s, const Tolerance& tol) const {
    if (!s.is_square() || s.rows() != p_.rows()) return false;
    return is_projector(s, tol) && delta_membership(psi_inv(s, p_, tol), spec_, tol);
}

SolutionFamily solve_jordan_commuting_projectors(const Matrix& b, const Matrix& p, const JordanSpec& spec,
                                                 const Tolerance& tol) {
    spec.validate();
    require_square(b, "solve_jordan_commuting_projectors");
    if (spec.r() != b.rows() || !is_nonsingular(b, tol))
        throw Error(ErrorCode::SingularityMismatch, "the Jordan route needs a nonsingular B of full Jordan size");
    if (!validate_similarity(p, spec, b, tol)) throw Error(ErrorCode::PrecondViolated, "P·J·P⁻¹ does not match B");
    return SolutionFamily(FamilyKind::JordanCommuteIdempotent, b, p, spec);
}

}  // namespace sharp
