#include "sharp/commutant.hpp"

#include <algorithm>

namespace sharp {

namespace {

std::vector<std::size_t> starts(const EigenBlocks& e) {
    std::vector<std::size_t> out{0};
    for (std::size_t sz : e.sizes) out.push_back(out.back() + sz);
    return out;
}

RutmCoeffs random_core(std::size_t m, Rng& rng) {
    RutmCoeffs c;
    c.reserve(m);
    for (std::size_t i = 0; i < m; ++i) c.emplace_back(Rational(uniform_int(rng, -2, 2)), Rational(uniform_int(rng, -2, 2)));
    return c;
}

}  // namespace

Matrix rutm_matrix(const RutmCoeffs& coeffs) {
    const std::size_t m = coeffs.size();
    Matrix x = Matrix::zero(m, m, Mode::exact);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) x.set(i, j, coeffs[j - i]);
    return x;
}

Matrix cullen_block(std::size_t rows, std::size_t cols, const RutmCoeffs& core) {
    const std::size_t m = std::min(rows, cols);
    if (core.size() != m) throw Error(ErrorCode::ShapeMismatch, "RUTM core size must be min(rows, cols)");
    Matrix out = Matrix::zero(rows, cols, Mode::exact);
    out.set_block(0, cols - m, rutm_matrix(core));
    return out;
}

CommutantElement CommutantElement::zero(const JordanSpec& spec) {
    spec.validate();
    CommutantElement e{spec, {}};
    for (const auto& eb : spec.eigenvalues) {
        const std::size_t t = eb.count();
        std::vector<std::vector<RutmCoeffs>> grid(t, std::vector<RutmCoeffs>(t));
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t k = 0; k < t; ++k) grid[i][k].assign(std::min(eb.sizes[i], eb.sizes[k]), Gaussian());
        e.blocks.push_back(std::move(grid));
    }
    return e;
}

CommutantElement CommutantElement::identity(const JordanSpec& spec) {
    CommutantElement e = zero(spec);
    for (auto& grid : e.blocks)
        for (std::size_t i = 0; i < grid.size(); ++i) grid[i][i][0] = Gaussian(1);
    return e;
}

void CommutantElement::check_shape() const {
    if (blocks.size() != spec.s()) throw Error(ErrorCode::ShapeMismatch, "one block grid per eigenvalue expected");
    for (std::size_t j = 0; j < spec.s(); ++j) {
        const auto& eb = spec.eigenvalues[j];
        const std::size_t t = eb.count();
        if (blocks[j].size() != t) throw Error(ErrorCode::ShapeMismatch, "block grid must be t_j × t_j");
        for (std::size_t i = 0; i < t; ++i) {
            if (blocks[j][i].size() != t) throw Error(ErrorCode::ShapeMismatch, "block grid must be t_j × t_j");
            for (std::size_t k = 0; k < t; ++k)
                if (blocks[j][i][k].size() != std::min(eb.sizes[i], eb.sizes[k]))
                    throw Error(ErrorCode::ShapeMismatch, "RUTM core has the wrong size");
        }
    }
}

Matrix CommutantElement::expand() const {
    spec.validate();
    check_shape();
    Matrix out = Matrix::zero(spec.r(), spec.r(), Mode::exact);
    for (std::size_t j = 0; j < spec.s(); ++j) {
        const auto& eb = spec.eigenvalues[j];
        const std::size_t base = spec.offset(j);
        const auto st = starts(eb);
        for (std::size_t i = 0; i < eb.count(); ++i)
            for (std::size_t k = 0; k < eb.count(); ++k)
                out.set_block(base + st[i], base + st[k], cullen_block(eb.sizes[i], eb.sizes[k], blocks[j][i][k]));
    }
    return out;
}

CommutantElement CommutantElement::from_matrix(const Matrix& t, const JordanSpec& spec) {
    spec.validate();
    if (t.mode() != Mode::exact) throw Error(ErrorCode::NotSupported, "Cullen extraction is exact-only");
    const std::size_t r = spec.r();
    if (t.rows() != r || t.cols() != r) throw Error(ErrorCode::ShapeMismatch, "matrix size differs from the Jordan size");
    CommutantElement e = zero(spec);
    for (std::size_t j = 0; j < spec.s(); ++j) {
        const auto& eb = spec.eigenvalues[j];
        const std::size_t base = spec.offset(j);
        const auto st = starts(eb);
        for (std::size_t i = 0; i < eb.count(); ++i) {
            for (std::size_t k = 0; k < eb.count(); ++k) {
                const std::size_t rows = eb.sizes[i], cols = eb.sizes[k], m = std::min(rows, cols);
                const Matrix blk = t.block(base + st[i], base + st[k], rows, cols);
                RutmCoeffs core(m);
                for (std::size_t l = 0; l < m; ++l) core[l] = blk.exact_at(0, cols - m + l);
                if (!(cullen_block(rows, cols, core) == blk))
                    throw Error(ErrorCode::NotInCommutant, "block is not of Cullen form");
                e.blocks[j][i][k] = std::move(core);
            }
        }
    }
    if (!(e.expand() == t)) throw Error(ErrorCode::NotInCommutant, "entries couple distinct eigenvalues");
    return e;
}

CommutantProjector::CommutantProjector(CommutantElement element) : element_(std::move(element)) {
    matrix_ = element_.expand();
    if (!(matrix_ * matrix_ == matrix_)) throw Error(ErrorCode::NotAProjector, "commutant element is not idempotent");
}

CommutantProjector CommutantProjector::from_matrix(const Matrix& t, const JordanSpec& spec) {
    return CommutantProjector(CommutantElement::from_matrix(t, spec));
}

std::vector<RutmCoeffs> rutm_idempotents(std::size_t size) {
    if (size == 0) throw Error(ErrorCode::InvalidArgument, "RUTM size must be positive");
    std::vector<RutmCoeffs> out;
    // a_1² = a_1, then (2a_1 − 1)·a_{m+1} = −Σ_{i=1}^{m−1} a_{i+1}·a_{m+1−i}.
    for (int a1 : {0, 1}) {
        RutmCoeffs a{Gaussian(a1)};
        const Gaussian lead(2 * a1 - 1);
        for (std::size_t m = 1; m < size; ++m) {
            Gaussian s;
            for (std::size_t i = 1; i + 1 <= m; ++i) s += a[i] * a[m - i];
            a.push_back(-s / lead);
        }
        out.push_back(std::move(a));
    }
    return out;
}

std::set<std::size_t> admissible_ranks(std::size_t q, std::size_t p) {
    if (p == 0 || q < p) throw Error(ErrorCode::InvalidArgument, "expected block sizes q ≥ p ≥ 1");
    return {0, p, q, q + p};
}

bool delta_membership(const Matrix& t, const JordanSpec& spec, const Tolerance& tol) {
    const std::size_t r = spec.r();
    if (!t.is_square() || t.rows() != r) throw Error(ErrorCode::ShapeMismatch, "T must be r × r");
    const Matrix j = build_jordan_matrix(spec, t.mode());
    return is_projector(t, tol) && commutes(t, j, tol);
}

Matrix random_commutant_unit(const JordanSpec& spec, Rng& rng, const std::vector<int>* classes) {
    spec.validate();
    if (classes && classes->size() != spec.block_count())
        throw Error(ErrorCode::ShapeMismatch, "one class label per Jordan block expected");
    const Matrix id = Matrix::identity(spec.r(), Mode::exact);
    while (true) {
        CommutantElement e = CommutantElement::zero(spec);
        std::size_t first = 0;
        for (std::size_t j = 0; j < spec.s(); ++j) {
            const auto& eb = spec.eigenvalues[j];
            for (std::size_t i = 0; i < eb.count(); ++i)
                for (std::size_t k = 0; k < eb.count(); ++k) {
                    if (classes && (*classes)[first + i] != (*classes)[first + k]) continue;
                    e.blocks[j][i][k] = random_core(std::min(eb.sizes[i], eb.sizes[k]), rng);
                }
            first += eb.count();
        }
        Matrix s = id + e.expand();
        if (rank(s) == spec.r()) return s;
    }
}

Matrix mask_idempotent(const JordanSpec& spec, const std::vector<bool>& mask) {
    if (mask.size() != spec.block_count()) throw Error(ErrorCode::ShapeMismatch, "one mask bit per Jordan block expected");
    std::vector<Gaussian> d;
    std::size_t b = 0;
    for (const auto& eb : spec.eigenvalues)
        for (std::size_t sz : eb.sizes) {
            d.insert(d.end(), sz, Gaussian(mask[b] ? 1 : 0));
            ++b;
        }
    return Matrix::diagonal(d);
}

CommutantProjector sample_delta_projector(const JordanSpec& spec, std::uint64_t seed,
                                          const std::optional<std::vector<bool>>& mask) {
    Rng rng(seed);
    const Matrix s = random_commutant_unit(spec, rng);
    std::vector<bool> bits;
    if (mask) {
        bits = *mask;
    } else {
        for (std::size_t b = 0; b < spec.block_count(); ++b) bits.push_back(coin(rng));
    }
    const Matrix t = s * mask_idempotent(spec, bits) * inverse(s);
    return CommutantProjector::from_matrix(t, spec);
}

}  // namespace sharp
