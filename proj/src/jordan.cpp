#include "sharp/jordan.hpp"

#include <algorithm>
#include <numeric>

namespace sharp {

std::size_t EigenBlocks::total() const { return std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}); }

std::size_t JordanSpec::r() const {
    std::size_t n = 0;
    for (const auto& e : eigenvalues) n += e.total();
    return n;
}

std::size_t JordanSpec::block_count() const {
    std::size_t n = 0;
    for (const auto& e : eigenvalues) n += e.count();
    return n;
}

std::size_t JordanSpec::offset(std::size_t j) const {
    std::size_t o = 0;
    for (std::size_t k = 0; k < j; ++k) o += eigenvalues[k].total();
    return o;
}

void JordanSpec::validate() const {
    for (std::size_t j = 0; j < eigenvalues.size(); ++j) {
        const auto& e = eigenvalues[j];
        if (e.lambda.is_zero()) throw Error(ErrorCode::InvalidSpec, "eigenvalues must be nonzero");
        for (std::size_t k = 0; k < j; ++k)
            if (eigenvalues[k].lambda == e.lambda) throw Error(ErrorCode::InvalidSpec, "repeated eigenvalue");
        if (e.sizes.empty()) throw Error(ErrorCode::InvalidSpec, "eigenvalue without Jordan blocks");
        for (std::size_t k = 0; k < e.sizes.size(); ++k) {
            if (e.sizes[k] == 0) throw Error(ErrorCode::InvalidSpec, "block size must be positive");
            if (k && e.sizes[k] > e.sizes[k - 1]) throw Error(ErrorCode::InvalidSpec, "block sizes must descend");
        }
    }
    if (P && !P->is_square()) throw Error(ErrorCode::InvalidSpec, "P must be square");
}

Matrix jordan_block(const Gaussian& lambda, std::size_t size) {
    Matrix j = Matrix::zero(size, size, Mode::exact);
    for (std::size_t i = 0; i < size; ++i) {
        j.set(i, i, lambda);
        if (i + 1 < size) j.set(i, i + 1, Gaussian(1));
    }
    return j;
}

Matrix build_jordan_matrix(const JordanSpec& spec, Mode mode) {
    spec.validate();
    std::vector<Matrix> blocks;
    for (const auto& e : spec.eigenvalues)
        for (std::size_t sz : e.sizes) blocks.push_back(jordan_block(e.lambda, sz));
    return block_diag(blocks).with_mode(mode);
}

JordanSpec weyr_structure(const Matrix& m, const std::vector<Gaussian>& candidates) {
    require_square(m, "weyr_structure");
    if (m.mode() != Mode::exact) throw Error(ErrorCode::NotSupported, "Jordan structure recovery is exact-only");
    const std::size_t n = m.rows();
    if (rank(m) < n) throw Error(ErrorCode::ZeroEigenvalue, "matrix is singular");
    JordanSpec spec;
    std::size_t covered = 0;
    for (const auto& lambda : candidates) {
        if (lambda.is_zero()) throw Error(ErrorCode::ZeroEigenvalue, "zero candidate eigenvalue");
        for (const auto& e : spec.eigenvalues)
            if (e.lambda == lambda) throw Error(ErrorCode::IncompleteSpectrum, "repeated candidate eigenvalue");
        const Matrix shifted = m - lambda * Matrix::identity(n, Mode::exact);
        // nullity[k] = dim ker (M − λI)^k
        std::vector<std::size_t> nullity{0};
        Matrix pw = Matrix::identity(n, Mode::exact);
        while (true) {
            pw = pw * shifted;
            const std::size_t d = n - rank(pw);
            if (d == nullity.back()) break;
            nullity.push_back(d);
        }
        if (nullity.size() == 1)
            throw Error(ErrorCode::IncompleteSpectrum, "candidate " + lambda.str() + " is not an eigenvalue");
        EigenBlocks eb{lambda, {}};
        nullity.push_back(nullity.back());
        for (std::size_t k = nullity.size() - 2; k >= 1; --k) {
            const std::size_t at_least_k = nullity[k] - nullity[k - 1];
            const std::size_t at_least_next = nullity[k + 1] - nullity[k];
            for (std::size_t c = at_least_next; c < at_least_k; ++c) eb.sizes.push_back(k);
        }
        covered += eb.total();
        spec.eigenvalues.push_back(std::move(eb));
    }
    if (covered != n)
        throw Error(ErrorCode::IncompleteSpectrum, "candidates account for " + std::to_string(covered) + " of " +
                                                       std::to_string(n) + " dimensions");
    return spec;
}

bool validate_similarity(const Matrix& p, const JordanSpec& spec, const Matrix& m, const Tolerance& tol) {
    const std::size_t r = spec.r();
    if (!p.is_square() || !m.is_square() || p.rows() != r || m.rows() != r)
        throw Error(ErrorCode::ShapeMismatch, "similarity shapes disagree with the Jordan size");
    Matrix pp = p, mm = m;
    unify_modes(pp, mm);
    if (!is_nonsingular(pp, tol)) return false;
    const Matrix j = build_jordan_matrix(spec, pp.mode());
    return approx_eq(pp * j * inverse(pp, tol), mm, tol);
}

}  // namespace sharp
