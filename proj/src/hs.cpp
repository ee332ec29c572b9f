#include "sharp/hs.hpp"

#include "sharp/svd.hpp"

namespace sharp {

Matrix HSDecomposition::sigma_matrix() const {
    Matrix s = Matrix::zero(r, r, Mode::floating);
    for (std::size_t i = 0; i < r; ++i) s.set(i, i, Complex(sigma[i]));
    return s;
}

HSDecomposition hs_decompose(const Matrix& b, const Tolerance& tol) {
    require_square(b, "hs_decompose");
    if (b.mode() != Mode::floating) throw Error(ErrorCode::ExactNotSupported, "decomposition is float-only");
    tol.validate();
    const auto d = svd(b);
    const std::size_t n = b.rows();
    std::size_t r = 0;
    if (!d.sigma.empty() && d.sigma.front() > 0.0) {
        const double cut = tol.rank_threshold_factor * d.sigma.front();
        while (r < n && d.sigma[r] > cut) ++r;
    }
    if (r == 0) throw Error(ErrorCode::ZeroMatrix, "the zero matrix has no decomposition");
    HSDecomposition out;
    out.U = d.U;
    out.sigma.assign(d.sigma.begin(), d.sigma.begin() + static_cast<std::ptrdiff_t>(r));
    const Matrix kl = (d.V.adjoint() * d.U).block(0, 0, r, n);
    out.K = kl.block(0, 0, r, r);
    out.L = kl.block(0, r, r, n - r);
    out.r = r;
    return out;
}

Matrix hs_reconstruct(const HSDecomposition& d) {
    const std::size_t n = d.n(), r = d.r;
    const Matrix s = d.sigma_matrix();
    Matrix core = Matrix::zero(n, n, Mode::floating);
    core.set_block(0, 0, s * d.K);
    if (r < n) core.set_block(0, r, s * d.L);
    return d.U * core * d.U.adjoint();
}

SigmaK sigma_k(const HSDecomposition& d, const Tolerance& tol) {
    SigmaK out{d.sigma_matrix() * d.K, false};
    out.nonsingular = rank(out.product, tol) == d.r;
    return out;
}

bool hs_valid(const HSDecomposition& d, const Tolerance& tol) {
    const std::size_t n = d.n(), r = d.r;
    if (r == 0 || r > n || d.sigma.size() != r || !d.U.is_square()) return false;
    if (d.K.rows() != r || d.K.cols() != r || d.L.rows() != r || d.L.cols() != n - r) return false;
    for (std::size_t i = 0; i < r; ++i)
        if (!(d.sigma[i] > 0.0) || (i && d.sigma[i] > d.sigma[i - 1])) return false;
    if (!approx_eq(d.U * d.U.adjoint(), Matrix::identity(n, Mode::floating), tol)) return false;
    const Matrix kk = d.K * d.K.adjoint() + d.L * d.L.adjoint();
    return approx_eq(kk, Matrix::identity(r, Mode::floating), tol);
}

}  // namespace sharp
