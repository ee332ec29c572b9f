#include <doctest.h>

#include <algorithm>

#include "sharp/equations.hpp"
#include "sharp/inverses.hpp"
#include "sharp/oracle.hpp"
#include "sharp/order.hpp"
#include "support/generators.hpp"

using namespace sharp;

namespace {

const Tolerance kTol{1e-8, 1e-10};

Matrix diag(std::initializer_list<long> d) {
    std::vector<Gaussian> g;
    for (long v : d) g.emplace_back(v);
    return Matrix::diagonal(g);
}

const std::vector<Gaussian> kGrid01{Gaussian(0), Gaussian(1)};

// Does some member of `pool` equal m within tolerance?
bool found_in(const Matrix& m, const std::vector<Matrix>& pool) {
    return std::any_of(pool.begin(), pool.end(), [&](const Matrix& x) { return approx_eq(x.to_float(), m.to_float(), kTol); });
}

}  // namespace

TEST_CASE("EP commuting idempotents on diag(1,2,0)") {
    const Matrix b = diag({1, 2, 0});
    const HSDecomposition hs = hs_decompose(b.to_float());
    const std::size_t r = hs.r;
    CHECK(approx_eq(solve_ep_commute_idempotent(hs, Matrix::zero(r, r, Mode::floating), Matrix::zero(1, 1, Mode::floating)),
                    Matrix::zero(3, 3, Mode::floating)));
    CHECK(approx_eq(solve_ep_commute_idempotent(hs, Matrix::identity(r, Mode::floating), Matrix::identity(1, Mode::floating)),
                    Matrix::identity(3, Mode::floating)));

    // Every grid solution is diagonal and splits back into (T, W).
    const auto brute = enumerate_commuting_idempotents(b, {Gaussian(-1), Gaussian(0), Gaussian(1)});
    CHECK(brute.size() == 8);
    for (const auto& s : brute) {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = 0; k < 3; ++k)
                if (i != k) CHECK(s.exact_at(i, k).is_zero());
        const auto parts = decompose_ep_solution(hs, s.to_float());
        REQUIRE(parts.has_value());
        CHECK(approx_eq(solve_ep_commute_idempotent(hs, parts->first, parts->second), s.to_float()));
        CHECK(verify_power_commute(s, b, 6));
    }
    CHECK_FALSE(decompose_ep_solution(hs, Matrix::floating({{1, 1, 0}, {0, 0, 0}, {0, 0, 0}})).has_value());

    auto code_of = [&](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvariantViolated;
    };
    CHECK(code_of([&] {
              solve_ep_commute_idempotent(hs, Matrix::floating({{1, 1}, {0, 0}}), Matrix::zero(1, 1, Mode::floating));
          }) == ErrorCode::NotInTau);
    CHECK(code_of([&] {
              solve_ep_commute_idempotent(hs, Matrix::zero(2, 2, Mode::floating), Matrix::floating({{2}}));
          }) == ErrorCode::WNotProjector);
    const HSDecomposition not_ep = hs_decompose(Matrix::floating({{1, 1}, {0, 0}}));
    CHECK(code_of([&] {
              solve_ep_commute_idempotent(not_ep, Matrix::zero(1, 1, Mode::floating), Matrix::zero(1, 1, Mode::floating));
          }) == ErrorCode::NotEP);
}

TEST_CASE("EP family members solve the system") {
    Rng rng(81);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 2, 5));
        // Normal matrices are EP: a unitary similarity of a diagonal with some zeros.
        const Matrix u = hs_decompose(testgen::random_float(rng, n, n)).U;
        Matrix d = Matrix::zero(n, n, Mode::floating), sub = d;
        d.set(0, 0, Complex(1.5, 0.5));
        for (std::size_t i = 1; i < n; ++i)
            if (coin(rng)) d.set(i, i, Complex(testgen::uniform(rng, 0.5, 2), testgen::uniform(rng, -1, 1)));
        for (std::size_t i = 0; i < n; ++i)
            if (coin(rng)) sub.set(i, i, d.float_at(i, i));
        const Matrix b = u * d * u.adjoint();
        const HSDecomposition hs = hs_decompose(b);
        REQUIRE(is_ep(b, kTol));
        const Matrix t = phi(u * sub * u.adjoint(), hs, kTol);
        const std::size_t m = n - hs.r;
        Matrix w = Matrix::zero(m, m, Mode::floating);
        for (std::size_t i = 0; i < m; ++i)
            if (coin(rng)) w.set(i, i, Complex(1.0, 0.0));
        const Matrix s = solve_ep_commute_idempotent(hs, t, w, kTol);
        CHECK(is_projector(s, kTol));
        CHECK(commutes(s, b, kTol));
        CHECK(verify_power_commute(s, b, 6, kTol));
        const auto parts = decompose_ep_solution(hs, s, kTol);
        REQUIRE(parts.has_value());
        CHECK(approx_eq(parts->first, t, kTol));
    }
}

TEST_CASE("count_solutions") {
    CHECK(count_solutions(hs_decompose(diag({1, 2, 0}).to_float()), {{{Gaussian(1), {1}}, {Gaussian(2), {1}}}, std::nullopt}) == 8);
    CHECK(count_solutions(hs_decompose(diag({1, 2}).to_float()), {{{Gaussian(1), {1}}, {Gaussian(2), {1}}}, std::nullopt}) == 4);
    CHECK(count_solutions(hs_decompose(Matrix::floating({{5, 1}, {0, 5}})), {{{Gaussian(5), {2}}}, std::nullopt}) == 2);

    CHECK(enumerate_commuting_idempotents(diag({1, 2}), {Gaussian(-1), Gaussian(0), Gaussian(1)}).size() == 4);
    CHECK(enumerate_commuting_idempotents(Matrix::exact({{5, 1}, {0, 5}}), {Gaussian(-1), Gaussian(0), Gaussian(1), Gaussian(2)})
              .size() == 2);

    auto code_of = [&](const Matrix& b, const JordanSpec& spec) {
        try {
            count_solutions(hs_decompose(b), spec);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvariantViolated;
    };
    CHECK(code_of(diag({3, 3}).to_float(), {{{Gaussian(3), {1, 1}}}, std::nullopt}) == ErrorCode::HypothesisViolated);
    CHECK(code_of(diag({3, 0, 0}).to_float(), {{{Gaussian(3), {1}}}, std::nullopt}) == ErrorCode::HypothesisViolated);
}

TEST_CASE("verify_power_commute") {
    const Matrix b = Matrix::exact({{2, 1}, {0, 3}});
    CHECK(verify_power_commute(Matrix::identity(2, Mode::exact), b, 5));
    CHECK_FALSE(verify_power_commute(Matrix::exact({{1, 0}, {1, 0}}), b, 5));
    CHECK_FALSE(verify_power_commute(Matrix::exact({{0, 0}, {0, 1}}), b, 5));
}

TEST_CASE("XBX family") {
    const HSDecomposition hs = hs_decompose(Matrix::floating({{1, 1}, {0, 0}}));
    CHECK(approx_eq(solve_xbx_family(hs, Matrix::zero(1, 1, Mode::floating)), Matrix::zero(2, 2, Mode::floating)));
    const Matrix b = hs_reconstruct(hs);
    const Matrix s = solve_xbx_family(hs, Matrix::identity(1, Mode::floating));
    CHECK(approx_eq(s, b * moore_penrose(b), kTol));
    CHECK(approx_eq(s * b * s, b * s, kTol));
    CHECK(approx_eq(s * s, s, kTol));

    Rng rng(82);
    for (int trial = 0; trial < 30; ++trial) {
        const auto target = testgen::random_target(rng, testgen::random_spec(rng, {3, 2, 2}), uniform_int(rng, 0, 2));
        const HSDecomposition h = hs_decompose(target.b.to_float());
        const Matrix t = psi(sample_delta_projector(target.spec, rng()).matrix(), sigma_k_similarity(h, target.q));
        const Matrix x = solve_xbx_family(h, t, kTol);
        const Matrix bf = target.b.to_float();
        CHECK(approx_eq(x * bf * x, bf * x, kTol));
        CHECK(approx_eq(x * x, x, kTol));
    }
    CHECK_THROWS_AS(solve_xbx_family(hs_decompose(diag({2, 1, 0}).to_float()), Matrix::floating({{1, 1}, {0, 0}})), Error);
}

TEST_CASE("Jordan commuting projectors") {
    const JordanSpec two{{{Gaussian(2), {1}}, {Gaussian(3), {1}}}, std::nullopt};
    const SolutionFamily f = solve_jordan_commuting_projectors(diag({2, 3}), Matrix::identity(2, Mode::exact), two);
    REQUIRE(f.members().has_value());
    const auto& ms = *f.members();
    REQUIRE(ms.size() == 4);
    CHECK(ms[0] == diag({0, 0}));
    CHECK(ms[1] == diag({1, 0}));
    CHECK(ms[2] == diag({0, 1}));
    CHECK(ms[3] == diag({1, 1}));
    CHECK(f.finite_count() == std::optional<std::uint64_t>{4});

    const JordanSpec one{{{Gaussian(5), {2}}}, std::nullopt};
    const SolutionFamily g = solve_jordan_commuting_projectors(Matrix::exact({{5, 1}, {0, 5}}), Matrix::identity(2, Mode::exact), one);
    REQUIRE(g.members().has_value());
    CHECK(g.members()->size() == 2);

    const JordanSpec qp{{{Gaussian(1), {2, 1}}}, std::nullopt};
    const Matrix p = Matrix::exact({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
    const Matrix b = p * build_jordan_matrix(qp) * inverse(p);
    const SolutionFamily h = solve_jordan_commuting_projectors(b, p, qp);
    CHECK_FALSE(h.members().has_value());
    CHECK_FALSE(h.finite_count().has_value());
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Matrix s = h.sample(seed);
        CHECK(h.contains(s));
        CHECK(commutes(s, b));
        const std::size_t rk = rank(s);
        CHECK((rk == 0 || rk == 1 || rk == 2 || rk == 3));
        CHECK(verify_power_commute(s, b, 6));
    }
    CHECK_FALSE(h.contains(Matrix::exact({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}})));

    auto code_of = [&](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvariantViolated;
    };
    CHECK(code_of([&] { solve_jordan_commuting_projectors(diag({2, 0}), Matrix::identity(2, Mode::exact), two); }) ==
          ErrorCode::SingularityMismatch);
    CHECK(code_of([&] { solve_jordan_commuting_projectors(diag({2, 4}), Matrix::identity(2, Mode::exact), two); }) ==
          ErrorCode::PrecondViolated);
}

TEST_CASE("finite families match exhaustive enumeration") {
    Rng rng(83);
    const std::vector<Gaussian> grid{Gaussian(-1), Gaussian(0), Gaussian(1)};
    for (int trial = 0; trial < 12; ++trial) {
        JordanSpec spec = testgen::random_spec(rng, {3, 1, 1, true});
        if (spec.r() > 3) continue;
        // Diagonal B keeps the exhaustive search on a tiny grid complete.
        std::vector<Gaussian> d;
        for (const auto& e : spec.eigenvalues) d.push_back(e.lambda);
        const Matrix b = Matrix::diagonal(d);
        const SolutionFamily f = solve_jordan_commuting_projectors(b, Matrix::identity(spec.r(), Mode::exact), spec);
        const auto brute = enumerate_commuting_idempotents(b, grid);
        REQUIRE(f.members().has_value());
        CHECK(f.members()->size() == brute.size());
        for (const auto& m : *f.members()) CHECK(found_in(m, brute));
        for (const auto& m : brute) CHECK(found_in(m, *f.members()));
    }
    // A nonsingular EP matrix of rank n − 1 doubles the count through W.
    const auto brute = enumerate_commuting_idempotents(diag({1, 2, 0}), kGrid01);
    CHECK(brute.size() == 8);
}
