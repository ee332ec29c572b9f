#include <doctest.h>

#include "sharp/inverses.hpp"
#include "sharp/order.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace sharp;

namespace {

const Tolerance kTol{1e-8, 1e-10};

Matrix diag3(long a, long b, long c) { return Matrix::diagonal({Gaussian(a), Gaussian(b), Gaussian(c)}); }

// Exact target B plus float HS data and its similarity at the ΣK level.
struct Fixture {
    testgen::JordanTarget target;
    HSDecomposition hs;
    Matrix p;
};

Fixture make_fixture(Rng& rng, const testgen::SpecShape& shape) {
    Fixture f;
    f.target = testgen::random_target(rng, testgen::random_spec(rng, shape), uniform_int(rng, 0, 2));
    f.hs = hs_decompose(f.target.b.to_float());
    f.p = sigma_k_similarity(f.hs, f.target.q);
    return f;
}

}  // namespace

TEST_CASE("sharp_leq examples") {
    const Matrix b = Matrix::identity(3, Mode::exact);
    CHECK(sharp_leq(Matrix::zero(3, 3, Mode::exact), b));
    CHECK(sharp_leq(b, b));
    CHECK(sharp_leq(Matrix::exact({{0, 1, 0}, {0, 1, 0}, {0, 0, 0}}), b));
    CHECK_FALSE(sharp_leq(diag3(1, 0, 0), diag3(2, 1, 0)));
    CHECK(sharp_leq(diag3(2, 0, 0), diag3(2, 1, 0)));
    try {
        sharp_leq(Matrix::exact({{0, 1}, {0, 0}}), Matrix::identity(2, Mode::exact));
        FAIL("expected IndexTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IndexTooLarge);
    }
}

TEST_CASE("phi and phi_inv on a diagonal target") {
    const HSDecomposition hs = hs_decompose(diag3(2, 1, 0).to_float());
    CHECK(approx_eq(phi(Matrix::zero(3, 3, Mode::floating), hs), Matrix::zero(2, 2, Mode::floating)));
    CHECK(approx_eq(phi(diag3(2, 1, 0).to_float(), hs), Matrix::identity(2, Mode::floating)));
    const Matrix t = phi(diag3(2, 0, 0).to_float(), hs);
    CHECK(rank(t) == 1);
    CHECK(approx_eq(phi_inv(t, hs), diag3(2, 0, 0).to_float()));
    CHECK(approx_eq(phi_inv(Matrix::identity(2, Mode::floating), hs), diag3(2, 1, 0).to_float()));
    CHECK(approx_eq(phi_inv(Matrix::zero(2, 2, Mode::floating), hs), Matrix::zero(3, 3, Mode::floating)));
    const Matrix other = phi(diag3(0, 1, 0).to_float(), hs);
    CHECK(approx_eq(phi_inv(other, hs), diag3(0, 1, 0).to_float()));
    CHECK(approx_eq(predecessor_group_inverse(Matrix::identity(2, Mode::floating), hs),
                    Matrix::floating({{0.5, 0, 0}, {0, 1, 0}, {0, 0, 0}})));

    auto code_of = [&](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvariantViolated;
    };
    CHECK(code_of([&] { phi(diag3(1, 0, 0).to_float(), hs); }) == ErrorCode::NotAPredecessor);
    CHECK(code_of([&] { phi_inv(Matrix::floating({{1, 1}, {0, 1}}), hs); }) == ErrorCode::NotInTau);
    CHECK(code_of([&] { phi_inv(Matrix::floating({{0.5, 0.5}, {0.5, 0.5}}), hs); }) == ErrorCode::NotInTau);
}

TEST_CASE("psi is the identity map for P = I and round-trips otherwise") {
    const Matrix t = Matrix::exact({{1, 0}, {0, 0}});
    CHECK(psi(t, Matrix::identity(2, Mode::exact)) == t);
    Rng rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        const JordanSpec spec = testgen::random_spec(rng, {3, 2, 2});
        const Matrix p = testgen::random_unimodular(rng, spec.r());
        const Matrix td = sample_delta_projector(spec, rng()).matrix();
        CHECK(psi_inv(psi(td, p), p) == td);
        CHECK(psi(Matrix::identity(spec.r(), Mode::exact), p) == Matrix::identity(spec.r(), Mode::exact));
    }
    CHECK_THROWS_AS(psi(t, Matrix::exact({{1, 1}, {1, 1}})), Error);
}

TEST_CASE("jordan_predecessors examples") {
    const JordanSpec two{{{Gaussian(2), {1}}, {Gaussian(1), {1}}}, std::nullopt};
    const auto all = jordan_predecessors(Matrix::identity(3, Mode::exact), two, 3);
    REQUIRE(all.size() == 4);
    CHECK(all[0] == diag3(0, 0, 0));
    CHECK(all[1] == diag3(2, 0, 0));
    CHECK(all[2] == diag3(0, 1, 0));
    CHECK(all[3] == diag3(2, 1, 0));
    const auto none = jordan_predecessors(Matrix::identity(2, Mode::exact), JordanSpec{}, 2);
    REQUIRE(none.size() == 1);
    CHECK(none[0].is_zero());
    const auto chain = jordan_predecessors(Matrix::identity(2, Mode::exact), {{{Gaussian(5), {2}}}, std::nullopt}, 2);
    REQUIRE(chain.size() == 2);
    CHECK(chain[1] == Matrix::exact({{5, 1}, {0, 5}}));
    try {
        jordan_predecessors(Matrix::identity(2, Mode::exact), {{{Gaussian(5), {1, 1}}}, std::nullopt}, 2);
        FAIL("expected MultiplicityExceedsOne");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MultiplicityExceedsOne);
    }
}

TEST_CASE("jordan_predecessors match the subset order") {
    Rng rng(62);
    for (int trial = 0; trial < 15; ++trial) {
        const JordanSpec spec = testgen::random_spec(rng, {4, 1, 2, true});
        const auto target = testgen::random_target(rng, spec, 1);
        const auto all = jordan_predecessors(target.q, spec, target.n);
        REQUIRE(all.size() == (std::size_t{1} << spec.s()));
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t k = 0; k < all.size(); ++k)
                CHECK(sharp_leq(all[i], all[k]) == ((i & k) == i));
        CHECK(all.back() == target.b);
    }
}

TEST_CASE("conjecture refutation") {
    const ConjectureReport rep = conjecture_refutation();
    CHECK(rep.b == Matrix::identity(3, Mode::exact));
    CHECK(rep.a == Matrix::exact({{0, 1, 0}, {0, 1, 0}, {0, 0, 0}}));
    CHECK(rep.leq);
    CHECK_FALSE(rep.diagonal_form);
    CHECK(rep.block_forms.size() == 8);
    for (const auto& f : rep.block_forms) CHECK_FALSE(f == rep.a);
    // A is idempotent, so A² = A·I = I·A holds by hand.
    CHECK(rep.a * rep.a == rep.a);
}

TEST_CASE("successor_form examples") {
    const JordanSpec one{{{Gaussian(2), {1}}}, std::nullopt};
    const SuccessorForm f = successor_form(Matrix::exact({{2, 0}, {0, 0}}), Matrix::identity(2, Mode::exact), one,
                                           Matrix::exact({{5}}));
    CHECK(f.b == Matrix::exact({{2, 0}, {0, 5}}));
    CHECK(f.leq);
    CHECK(f.x_index_le_one);

    const Matrix full = Matrix::exact({{3, 0}, {0, 3}});
    const SuccessorForm same = successor_form(full, Matrix::identity(2, Mode::exact), {{{Gaussian(3), {1, 1}}}, std::nullopt},
                                              Matrix::zero(0, 0, Mode::exact));
    CHECK(same.b == full);
    CHECK(same.leq);

    const Matrix p = Matrix::exact({{1, 1, 1}, {0, 1, 3}, {0, 0, 1}});
    const JordanSpec j{{{Gaussian(1), {2}}}, std::nullopt};
    Matrix core = Matrix::zero(3, 3, Mode::exact);
    core.set_block(0, 0, Matrix::exact({{1, 1}, {0, 1}}));
    const Matrix a = p * core * inverse(p);
    const Matrix b = Matrix::exact({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK_FALSE(sharp_leq(a, b));
    // B shares the Jordan blocks of A but is not P·diag(J, X)·P⁻¹ for this P.
    const SuccessorForm g = successor_form(a, p, j, Matrix::exact({{1}}));
    CHECK(g.leq);
    CHECK_FALSE(g.b == b);

    const SuccessorForm bad = successor_form(Matrix::exact({{2, 0, 0}, {0, 0, 0}, {0, 0, 0}}),
                                             Matrix::identity(3, Mode::exact), one, Matrix::exact({{0, 1}, {0, 0}}));
    CHECK_FALSE(bad.x_index_le_one);
    CHECK_FALSE(bad.leq);
    CHECK_THROWS_AS(successor_form(Matrix::exact({{2, 0}, {0, 0}}), Matrix::identity(2, Mode::exact), one,
                                   Matrix::exact({{1, 0}, {0, 1}})),
                    Error);
}

TEST_CASE("extend_to_nonsingular") {
    CHECK(approx_eq(extend_to_nonsingular(hs_decompose(diag3(2, 1, 0).to_float())), diag3(2, 1, 1).to_float()));
    const Matrix nonsing = Matrix::floating({{1, 2}, {3, 4}});
    CHECK(approx_eq(extend_to_nonsingular(hs_decompose(nonsing)), nonsing));
    try {
        extend_to_nonsingular(hs_decompose(Matrix::floating({{0, 1}, {0, 0}})));
        FAIL("expected SingularK");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SingularK);
    }
    Rng rng(63);
    int done = 0;
    while (done < 200) {
        const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 6));
        const Matrix b = testgen::random_float_low_rank(rng, n);
        if (b.frobenius_norm() == 0.0 || !index_le_one(b)) continue;
        const Matrix c = extend_to_nonsingular(hs_decompose(b));
        CHECK(is_nonsingular(c));
        CHECK(sharp_leq(b, c, kTol));
        ++done;
    }
}

TEST_CASE("phi is an order isomorphism preserving rank") {
    Rng rng(64);
    for (int s = 0; s < 10; ++s) {
        const Fixture f = make_fixture(rng, {3, 2, 2});
        std::vector<Matrix> ts, as;
        for (int k = 0; k < 12; ++k) {
            const Matrix td = sample_delta_projector(f.target.spec, rng()).matrix();
            const Matrix tt = psi(td, f.p);
            const Matrix a = phi_inv(tt, f.hs, kTol);
            // The exact route through Q agrees with the float route through U.
            const Matrix exact_a = jordan_predecessor(f.target.q, f.target.spec, td, f.target.n);
            CHECK(oracle::rel_residual(a, exact_a.to_float()) < 1e-8);
            CHECK(sharp_leq(exact_a, f.target.b));
            const Matrix back = phi(a, f.hs, kTol);
            CHECK(approx_eq(back, tt, kTol));
            CHECK(rank(back, kTol) == rank(exact_a));
            CHECK(rank(exact_a) == rank(td));
            ts.push_back(back);
            as.push_back(exact_a);
        }
        for (std::size_t i = 0; i < as.size(); ++i)
            for (std::size_t k = 0; k < as.size(); ++k) CHECK(sharp_leq(as[i], as[k]) == proj_leq(ts[i], ts[k], kTol));
    }
}

TEST_CASE("order axioms and the difference identity on sampled predecessors") {
    Rng rng(65);
    for (int s = 0; s < 10; ++s) {
        const Fixture f = make_fixture(rng, {3, 2, 2});
        const Matrix bg = group_inverse(f.target.b);
        std::vector<Matrix> as;
        for (int k = 0; k < 8; ++k) {
            const Matrix td = sample_delta_projector(f.target.spec, rng()).matrix();
            const Matrix a = jordan_predecessor(f.target.q, f.target.spec, td, f.target.n);
            CHECK(group_inverse(f.target.b - a) == bg - group_inverse(a));
            const Matrix tt = psi(td, f.p);
            CHECK(oracle::rel_residual(predecessor_group_inverse(tt, f.hs, kTol), group_inverse(a).to_float()) < 1e-8);
            as.push_back(a);
        }
        const std::size_t m = as.size();
        std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k) leq[i][k] = sharp_leq(as[i], as[k]);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < m; ++k) {
                if (leq[i][k] && leq[k][i]) CHECK(as[i] == as[k]);
                if (leq[i][k] && rank(as[i]) == rank(as[k])) CHECK(as[i] == as[k]);
                for (std::size_t l = 0; l < m; ++l)
                    if (leq[i][k] && leq[k][l]) CHECK(leq[i][l]);
            }
    }
}
