#include "sharp/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sharp {

namespace {

using Column = std::vector<Complex>;

Complex dot(const Column& a, const Column& b) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double norm(const Column& a) { return std::sqrt(std::real(dot(a, a))); }

// Orthogonalize v against basis (two passes); returns the residual norm.
double project_out(Column& v, const std::vector<Column>& basis) {
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis) {
            const Complex c = dot(b, v);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
        }
    return norm(v);
}

// Fill basis up to dim vectors with orthonormalized unit vectors.
void complete(std::vector<Column>& basis, std::size_t dim) {
    for (std::size_t k = 0; k < dim && basis.size() < dim; ++k) {
        Column e(dim, 0.0);
        e[k] = 1.0;
        const double r = project_out(e, basis);
        if (r < 1e-6) continue;
        for (auto& x : e) x /= r;
        basis.push_back(std::move(e));
    }
}

Matrix from_columns(const std::vector<Column>& cols, std::size_t rows) {
    Matrix::FloatData d(rows * cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) d[i * cols.size() + j] = cols[j][i];
    return Matrix::floating(rows, cols.size(), std::move(d));
}

// Hestenes iteration for m >= n.
SingularValueDecomposition tall_svd(const Matrix& m) {
    const std::size_t rows = m.rows(), n = m.cols();
    std::vector<Column> a(n, Column(rows)), v(n, Column(n, 0.0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < rows; ++i) a[j][i] = m.float_at(i, j);
        v[j][j] = 1.0;
    }

    constexpr double eps = 1e-15;
    for (int sweep = 0; sweep < 80; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double alpha = std::real(dot(a[p], a[p]));
                const double beta = std::real(dot(a[q], a[q]));
                const Complex gamma = dot(a[p], a[q]);
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= eps * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const Complex phase = std::conj(gamma) / g;
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < rows; ++i) {
                    const Complex x = a[p][i], y = phase * a[q][i];
                    a[p][i] = c * x - s * y;
                    a[q][i] = s * x + c * y;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex x = v[p][i], y = phase * v[q][i];
                    v[p][i] = c * x - s * y;
                    v[q][i] = s * x + c * y;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> norms(n);
    for (std::size_t j = 0; j < n; ++j) norms[j] = norm(a[j]);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

    SingularValueDecomposition out;
    std::vector<Column> u_cols, v_cols;
    std::vector<bool> has_left(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = order[k];
        out.sigma.push_back(norms[j]);
        v_cols.push_back(v[j]);
    }
    // Left vectors of nonzero singular values come from the rotated columns;
    // the rest are filled in by completion and placed after them.
    std::vector<Column> left(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = out.sigma[k];
        if (s == 0.0) continue;
        Column u = a[order[k]];
        const double r = project_out(u, u_cols);
        if (r <= 1e-8 * s) continue;
        for (auto& x : u) x /= r;
        u_cols.push_back(u);
        left[k] = std::move(u);
        has_left[k] = true;
    }
    complete(u_cols, rows);
    // Reassemble in singular-value order: missing slots take the completion vectors.
    std::size_t spare = 0;
    for (std::size_t k = 0; k < n; ++k)
        if (has_left[k]) ++spare;
    std::vector<Column> ordered;
    for (std::size_t k = 0; k < n; ++k) {
        if (has_left[k])
            ordered.push_back(left[k]);
        else
            ordered.push_back(u_cols[spare++]);
    }
    for (; spare < u_cols.size(); ++spare) ordered.push_back(u_cols[spare]);

    out.U = from_columns(ordered, rows);
    out.V = from_columns(v_cols, n);
    return out;
}

void fix_phase(SingularValueDecomposition& d) {
    const std::size_t n = d.V.rows();
    const std::size_t paired = d.sigma.size();
    Matrix::FloatData u = d.U.float_data(), v = d.V.float_data();
    const std::size_t m = d.U.rows();
    for (std::size_t k = 0; k < d.V.cols(); ++k) {
        Complex w = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const Complex x = v[i * n + k];
            if (std::abs(x) > 1e-12) {
                w = std::conj(x) / std::abs(x);
                break;
            }
        }
        for (std::size_t i = 0; i < n; ++i) v[i * n + k] *= w;
        if (k < paired)
            for (std::size_t i = 0; i < m; ++i) u[i * m + k] *= w;
    }
    d.U = Matrix::floating(m, m, std::move(u));
    d.V = Matrix::floating(n, n, std::move(v));
}

}  // namespace

SingularValueDecomposition svd(const Matrix& m) {
    if (m.mode() != Mode::floating) throw Error(ErrorCode::ExactNotSupported, "svd requires a float matrix");
    SingularValueDecomposition out;
    if (m.rows() >= m.cols()) {
        out = tall_svd(m);
    } else {
        auto t = tall_svd(m.adjoint());
        out.U = std::move(t.V);
        out.V = std::move(t.U);
        out.sigma = std::move(t.sigma);
    }
    fix_phase(out);
    return out;
}

}  // namespace sharp
