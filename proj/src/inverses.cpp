#include "sharp/inverses.hpp"

#include "sharp/hs.hpp"
#include "sharp/svd.hpp"

namespace sharp {

namespace {

Matrix exact_moore_penrose(const Matrix& a) {
    const Echelon e = echelon(a);
    const std::size_t r = e.pivots.size();
    if (r == 0) return Matrix::zero(a.cols(), a.rows(), Mode::exact);
    Matrix f = Matrix::zero(a.rows(), r, Mode::exact);
    for (std::size_t k = 0; k < r; ++k) f.set_block(0, k, a.block(0, e.pivots[k], a.rows(), 1));
    const Matrix g = e.reduced.block(0, 0, r, a.cols());
    const Matrix fs = f.adjoint(), gs = g.adjoint();
    return gs * inverse(fs * a * gs) * fs;
}

Matrix float_moore_penrose(const Matrix& a, const Tolerance& tol) {
    const auto d = svd(a);
    Matrix out = Matrix::zero(a.cols(), a.rows(), Mode::floating);
    if (d.sigma.empty() || d.sigma.front() == 0.0) return out;
    const double cut = tol.rank_threshold_factor * d.sigma.front();
    for (std::size_t k = 0; k < d.sigma.size(); ++k) {
        if (d.sigma[k] <= cut) break;
        const Matrix vk = d.V.block(0, k, a.cols(), 1);
        const Matrix uk = d.U.block(0, k, a.rows(), 1);
        out = out + Complex(1.0 / d.sigma[k]) * (vk * uk.adjoint());
    }
    return out;
}

}  // namespace

Matrix moore_penrose(const Matrix& a, const Tolerance& tol) {
    if (a.mode() == Mode::exact) return exact_moore_penrose(a);
    tol.validate();
    return float_moore_penrose(a, tol);
}

bool index_le_one(const Matrix& a, const Tolerance& tol) {
    require_square(a, "index_le_one");
    return rank(a * a, tol) == rank(a, tol);
}

Matrix group_inverse(const Matrix& a, const Tolerance& tol) {
    require_square(a, "group_inverse");
    if (!index_le_one(a, tol)) throw Error(ErrorCode::IndexTooLarge, "group inverse needs index at most 1");
    if (a.is_zero()) return a;
    if (a.mode() == Mode::exact) return a * moore_penrose(a * a * a, tol) * a;
    const HSDecomposition hs = hs_decompose(a, tol);
    const auto sk = sigma_k(hs);
    if (!sk.nonsingular) throw Error(ErrorCode::IndexTooLarge, "ΣK is singular");
    const std::size_t r = hs.r, n = a.rows();
    const Matrix sk_inv = inverse(sk.product, tol);
    Matrix core = Matrix::zero(n, n, Mode::floating);
    core.set_block(0, 0, sk_inv);
    if (r < n) core.set_block(0, r, sk_inv * inverse(hs.K, tol) * hs.L);
    return hs.U * core * hs.U.adjoint();
}

bool is_ep(const Matrix& b, const Tolerance& tol) {
    require_square(b, "is_ep");
    const Matrix bp = moore_penrose(b, tol);
    return approx_eq(b * bp, bp * b, tol);
}

}  // namespace sharp
