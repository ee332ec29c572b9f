#include "sharp/order.hpp"

#include <algorithm>

#include "sharp/inverses.hpp"

namespace sharp {

namespace {

Matrix float_of(const Matrix& m) { return m.to_float(); }

void require_r(const Matrix& t, const HSDecomposition& hs, const char* what) {
    if (!t.is_square() || t.rows() != hs.r)
        throw Error(ErrorCode::ShapeMismatch, std::string(what) + ": T must be r × r");
}

}  // namespace

bool sharp_leq(const Matrix& a, const Matrix& b, const Tolerance& tol) {
    require_square(a, "sharp_leq");
    require_same_shape(a, b, "sharp_leq");
    Matrix x = a, y = b;
    unify_modes(x, y);
    if (!index_le_one(x, tol) || !index_le_one(y, tol))
        throw Error(ErrorCode::IndexTooLarge, "the sharp order needs index at most 1");
    const Matrix xx = x * x, xy = x * y;
    if (!approx_eq(xx, xy, tol)) return false;
    return approx_eq(xy, y * x, tol);
}

bool proj_leq(const Matrix& t1, const Matrix& t2, const Tolerance& tol) {
    require_same_shape(t1, t2, "proj_leq");
    Matrix x = t1, y = t2;
    unify_modes(x, y);
    return approx_eq(x, x * y, tol) && approx_eq(x, y * x, tol);
}

bool is_commuting_projector(const Matrix& t, const Matrix& m, const Tolerance& tol) {
    require_same_shape(t, m, "is_commuting_projector");
    Matrix x = t, y = m;
    unify_modes(x, y);
    return is_projector(x, tol) && commutes(x, y, tol);
}

Matrix phi_inv(const Matrix& t, const HSDecomposition& hs, const Tolerance& tol) {
    require_r(t, hs, "phi_inv");
    const Matrix tf = float_of(t);
    const Matrix sk = sigma_k(hs, tol).product;
    if (!is_commuting_projector(tf, sk, tol)) throw Error(ErrorCode::NotInTau, "T is not a projector commuting with ΣK");
    const std::size_t n = hs.n(), r = hs.r;
    Matrix core = Matrix::zero(n, n, Mode::floating);
    core.set_block(0, 0, tf * sk);
    if (r < n) core.set_block(0, r, tf * hs.sigma_matrix() * hs.L);
    return hs.U * core * hs.U.adjoint();
}

Matrix phi(const Matrix& a, const HSDecomposition& hs, const Tolerance& tol) {
    const std::size_t n = hs.n(), r = hs.r;
    if (!a.is_square() || a.rows() != n) throw Error(ErrorCode::ShapeMismatch, "phi: A must match B");
    const auto sk = sigma_k(hs, tol);
    if (!sk.nonsingular) throw Error(ErrorCode::IndexTooLarge, "B has index above 1");
    const Matrix m = hs.U.adjoint() * float_of(a) * hs.U;
    const Matrix t = m.block(0, 0, r, r) * inverse(sk.product, tol);
    Matrix back;
    try {
        back = phi_inv(t, hs, tol);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotInTau) throw;
        throw Error(ErrorCode::NotAPredecessor, "extracted T is not in τ");
    }
    if (!approx_eq(back, float_of(a), tol)) throw Error(ErrorCode::NotAPredecessor, "A is not a sharp predecessor of B");
    return t;
}

Matrix psi(const Matrix& t, const Matrix& p, const Tolerance& tol) {
    require_same_shape(t, p, "psi");
    Matrix x = t, y = p;
    unify_modes(x, y);
    return y * x * inverse(y, tol);
}

Matrix psi_inv(const Matrix& t, const Matrix& p, const Tolerance& tol) {
    require_same_shape(t, p, "psi_inv");
    Matrix x = t, y = p;
    unify_modes(x, y);
    return inverse(y, tol) * x * y;
}

Matrix predecessor_group_inverse(const Matrix& t, const HSDecomposition& hs, const Tolerance& tol) {
    require_r(t, hs, "predecessor_group_inverse");
    const Matrix tf = float_of(t);
    const auto sk = sigma_k(hs, tol);
    if (!sk.nonsingular) throw Error(ErrorCode::IndexTooLarge, "B has index above 1");
    if (!is_commuting_projector(tf, sk.product, tol))
        throw Error(ErrorCode::NotInTau, "T is not a projector commuting with ΣK");
    const std::size_t n = hs.n(), r = hs.r;
    const Matrix g = inverse(sk.product, tol) * tf;
    Matrix core = Matrix::zero(n, n, Mode::floating);
    core.set_block(0, 0, g);
    if (r < n) core.set_block(0, r, g * inverse(hs.K, tol) * hs.L);
    return hs.U * core * hs.U.adjoint();
}

namespace {

void require_similarity_shape(const Matrix& p, const JordanSpec& spec, std::size_t n) {
    spec.validate();
    if (!p.is_square() || p.rows() != n) throw Error(ErrorCode::ShapeMismatch, "P must be n × n");
    if (spec.r() > n) throw Error(ErrorCode::ShapeMismatch, "Jordan part larger than n");
}

Matrix pad(const Matrix& core, std::size_t n) {
    Matrix out = Matrix::zero(n, n, core.mode());
    out.set_block(0, 0, core);
    return out;
}

}  // namespace

std::vector<Matrix> jordan_predecessors(const Matrix& p, const JordanSpec& spec, std::size_t n) {
    require_similarity_shape(p, spec, n);
    for (const auto& e : spec.eigenvalues)
        if (e.count() > 1)
            throw Error(ErrorCode::MultiplicityExceedsOne, "eigenvalue " + e.lambda.str() + " has several Jordan blocks");
    const std::size_t l = spec.s();
    if (l >= 20) throw Error(ErrorCode::BudgetExceeded, "too many eigenvalues to list 2^s predecessors");
    const Matrix p_inv = inverse(p);
    std::vector<Matrix> out;
    for (std::size_t m = 0; m < (std::size_t{1} << l); ++m) {
        std::vector<Matrix> blocks;
        for (std::size_t i = 0; i < l; ++i) {
            const auto& e = spec.eigenvalues[i];
            blocks.push_back((m >> i) & 1 ? jordan_block(e.lambda, e.sizes[0])
                                          : Matrix::zero(e.sizes[0], e.sizes[0], Mode::exact));
        }
        const Matrix d = pad(block_diag(blocks), n).with_mode(p.mode());
        out.push_back(p * d * p_inv);
    }
    return out;
}

Matrix jordan_predecessor(const Matrix& p, const JordanSpec& spec, const Matrix& t, std::size_t n) {
    require_similarity_shape(p, spec, n);
    const std::size_t r = spec.r();
    if (!t.is_square() || t.rows() != r) throw Error(ErrorCode::ShapeMismatch, "T must be r × r");
    Matrix pp = p, tt = t;
    unify_modes(pp, tt);
    const Matrix tj = tt * build_jordan_matrix(spec, tt.mode());
    return pp * pad(tj, n) * inverse(pp);
}

ConjectureReport conjecture_refutation() {
    ConjectureReport rep;
    rep.b = Matrix::identity(3, Mode::exact);
    rep.a = Matrix::exact({{0, 1, 0}, {0, 1, 0}, {0, 0, 0}});
    rep.leq = sharp_leq(rep.a, rep.b);
    JordanSpec spec{{{Gaussian(1), {1, 1, 1}}}, std::nullopt};
    // Each unit block J_i = [1] is either kept or replaced by zero.
    rep.diagonal_form = false;
    for (unsigned m = 0; m < 8; ++m) {
        std::vector<Gaussian> d;
        for (unsigned i = 0; i < 3; ++i) d.emplace_back((m >> i) & 1 ? 1 : 0);
        const Matrix form = rep.b * Matrix::diagonal(d) * inverse(rep.b);
        if (form == rep.a) rep.diagonal_form = true;
        rep.block_forms.push_back(form);
    }
    return rep;
}

SuccessorForm successor_form(const Matrix& a, const Matrix& p, const JordanSpec& spec, const Matrix& x,
                             const Tolerance& tol) {
    const std::size_t n = a.rows();
    require_square(a, "successor_form");
    require_similarity_shape(p, spec, n);
    const std::size_t r = spec.r();
    if (!x.is_square() || x.rows() != n - r) throw Error(ErrorCode::ShapeMismatch, "X must be (n − r) × (n − r)");
    Matrix pp = p, aa = a;
    unify_modes(pp, aa);
    const Mode mode = x.mode() == Mode::floating ? Mode::floating : pp.mode();
    pp = pp.with_mode(mode);
    aa = aa.with_mode(mode);
    const Matrix p_inv = inverse(pp, tol);
    const Matrix j = build_jordan_matrix(spec, mode);
    if (!approx_eq(pp * pad(j, n) * p_inv, aa, tol))
        throw Error(ErrorCode::PrecondViolated, "A is not P·diag(J, O)·P⁻¹");
    SuccessorForm out;
    out.b = pp * block_diag({j, x.with_mode(mode)}) * p_inv;
    out.x_index_le_one = n == r || index_le_one(x, tol);
    out.leq = out.x_index_le_one && sharp_leq(aa, out.b, tol);
    return out;
}

Matrix extend_to_nonsingular(const HSDecomposition& hs, const Tolerance& tol) {
    const std::size_t n = hs.n(), r = hs.r;
    if (rank(hs.K, tol) < r) throw Error(ErrorCode::SingularK, "K is singular, so B has index above 1");
    const Matrix s = hs.sigma_matrix();
    Matrix core = Matrix::zero(n, n, Mode::floating);
    core.set_block(0, 0, s * hs.K);
    if (r < n) {
        core.set_block(0, r, (s - inverse(hs.K, tol)) * hs.L);
        core.set_block(r, r, Matrix::identity(n - r, Mode::floating));
    }
    return hs.U * core * hs.U.adjoint();
}

Matrix sigma_k_similarity(const HSDecomposition& hs, const Matrix& q) {
    if (!q.is_square() || q.rows() != hs.n()) throw Error(ErrorCode::ShapeMismatch, "Q must be n × n");
    return (hs.U.adjoint() * q.to_float()).block(0, 0, hs.r, hs.r);
}

}  // namespace sharp
