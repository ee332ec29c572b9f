#include <doctest.h>

#include "sharp/commutant.hpp"
#include "sharp/order.hpp"
#include "support/generators.hpp"

using namespace sharp;

TEST_CASE("RUTM and Cullen block shapes") {
    CHECK(rutm_matrix({Gaussian(1), Gaussian(2), Gaussian(3)}) == Matrix::exact({{1, 2, 3}, {0, 1, 2}, {0, 0, 1}}));
    const RutmCoeffs x{Gaussian(4), Gaussian(5)};
    CHECK(cullen_block(3, 2, x) == Matrix::exact({{4, 5}, {0, 4}, {0, 0}}));
    CHECK(cullen_block(2, 3, x) == Matrix::exact({{0, 4, 5}, {0, 0, 4}}));
    CHECK(cullen_block(2, 2, x) == rutm_matrix(x));
    CHECK_THROWS_AS(cullen_block(2, 3, {Gaussian(1)}), Error);
}

TEST_CASE("expand examples") {
    const JordanSpec spec{{{Gaussian(7), {2, 1}}}, std::nullopt};
    CHECK(CommutantElement::zero(spec).expand().is_zero());
    CHECK(CommutantElement::identity(spec).expand() == Matrix::identity(3, Mode::exact));
    CommutantElement e = CommutantElement::zero(spec);
    e.blocks[0][0][0] = {Gaussian(1), Gaussian(0)};  // X11 = I2
    CHECK(e.expand() == Matrix::exact({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
    e.blocks[0][0].pop_back();
    CHECK_THROWS_AS(e.expand(), Error);
}

TEST_CASE("expanded commutant elements commute with J") {
    Rng rng(51);
    for (int trial = 0; trial < 100; ++trial) {
        const JordanSpec spec = testgen::random_spec(rng, {3, 3, 3});
        CommutantElement e = CommutantElement::zero(spec);
        for (auto& grid : e.blocks)
            for (auto& row : grid)
                for (auto& core : row)
                    for (auto& c : core) c = Gaussian(Rational(uniform_int(rng, -3, 3)), Rational(uniform_int(rng, -3, 3)));
        const Matrix t = e.expand();
        const Matrix j = build_jordan_matrix(spec);
        CHECK(t * j == j * t);
        const CommutantElement back = CommutantElement::from_matrix(t, spec);
        CHECK(back.expand() == t);
    }
}

TEST_CASE("from_matrix rejects matrices outside the commutant") {
    const JordanSpec spec{{{Gaussian(5), {2}}}, std::nullopt};
    try {
        CommutantElement::from_matrix(Matrix::exact({{1, 0}, {0, 0}}), spec);
        FAIL("expected NotInCommutant");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotInCommutant);
    }
    const JordanSpec two{{{Gaussian(1), {1}}, {Gaussian(2), {1}}}, std::nullopt};
    CHECK_THROWS_AS(CommutantElement::from_matrix(Matrix::exact({{1, 1}, {0, 0}}), two), Error);
    CHECK_NOTHROW(CommutantProjector(CommutantElement::identity(two)));
}

TEST_CASE("rutm_idempotents are exactly O and I") {
    for (std::size_t m = 1; m <= 6; ++m) {
        const auto sols = rutm_idempotents(m);
        REQUIRE(sols.size() == 2);
        CHECK(rutm_matrix(sols[0]).is_zero());
        CHECK(rutm_matrix(sols[1]) == Matrix::identity(m, Mode::exact));
        for (const auto& s : sols) CHECK(rutm_matrix(s) * rutm_matrix(s) == rutm_matrix(s));
    }
}

TEST_CASE("admissible_ranks examples") {
    CHECK(admissible_ranks(3, 2) == std::set<std::size_t>{0, 2, 3, 5});
    CHECK(admissible_ranks(2, 2) == std::set<std::size_t>{0, 2, 4});
    CHECK(admissible_ranks(1, 1) == std::set<std::size_t>{0, 1, 2});
    CHECK_THROWS_AS(admissible_ranks(1, 2), Error);
}

TEST_CASE("delta_membership examples") {
    const JordanSpec j5{{{Gaussian(5), {2}}}, std::nullopt};
    CHECK(delta_membership(Matrix::zero(2, 2, Mode::exact), j5));
    CHECK(delta_membership(Matrix::identity(2, Mode::exact), j5));
    const Matrix t = Matrix::exact({{1, 0}, {0, 0}});
    const Matrix j = build_jordan_matrix(j5);
    CHECK_FALSE(t * j - j * t == Matrix::zero(2, 2, Mode::exact));
    CHECK_FALSE(delta_membership(t, j5));
    const JordanSpec j21{{{Gaussian(5), {2, 1}}}, std::nullopt};
    CHECK(delta_membership(Matrix::exact({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}), j21));
    CHECK(delta_membership(Matrix::exact({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}).to_float(), j21));
    CHECK_THROWS_AS(delta_membership(Matrix::identity(2, Mode::exact), j21), Error);
}

TEST_CASE("sampler examples") {
    const JordanSpec spec{{{Gaussian(2), {2, 1}}, {Gaussian(3), {1}}}, std::nullopt};
    CHECK(sample_delta_projector(spec, 4, std::vector<bool>{false, false, false}).matrix().is_zero());
    CHECK(sample_delta_projector(spec, 4, std::vector<bool>{true, true, true}).matrix() ==
          Matrix::identity(4, Mode::exact));
    const JordanSpec scalar{{{Gaussian(2), {1, 1}}}, std::nullopt};
    const Matrix t = sample_delta_projector(scalar, 1, std::vector<bool>{true, false}).matrix();
    CHECK(rank(t) == 1);
    CHECK(delta_membership(t, scalar));
    CHECK(sample_delta_projector(spec, 99).matrix() == sample_delta_projector(spec, 99).matrix());
}

TEST_CASE("sampled projectors are in δ with admissible ranks") {
    Rng rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t q = static_cast<std::size_t>(uniform_int(rng, 1, 3));
        const std::size_t p = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(q)));
        const JordanSpec spec{{{Gaussian(Rational(uniform_int(rng, 1, 5))), {q, p}}}, std::nullopt};
        const Matrix t = sample_delta_projector(spec, rng()).matrix();
        CHECK(delta_membership(t, spec));
        CHECK(admissible_ranks(q, p).count(rank(t)) == 1);
    }
}

TEST_CASE("a single Jordan block admits only O and I") {
    // Every δ element is a single RUTM, whose idempotents are O and I.
    for (std::size_t m = 1; m <= 4; ++m) {
        const JordanSpec spec{{{Gaussian(3), {m}}}, std::nullopt};
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const Matrix t = sample_delta_projector(spec, seed).matrix();
            CHECK((t.is_zero() || t == Matrix::identity(m, Mode::exact)));
        }
    }
}

TEST_CASE("equal intermediate rank projectors for two blocks are incomparable") {
    for (auto [q, p] : {std::pair<std::size_t, std::size_t>{2, 1}, {2, 2}, {1, 1}, {3, 2}}) {
        const JordanSpec spec{{{Gaussian(1), {q, p}}}, std::nullopt};
        std::vector<Matrix> mids;
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const Matrix t = sample_delta_projector(spec, seed).matrix();
            const std::size_t r = rank(t);
            if (r != 0 && r != p + q) mids.push_back(t);
        }
        for (std::size_t a = 0; a < mids.size(); ++a)
            for (std::size_t b = 0; b < mids.size(); ++b) {
                if (a == b || mids[a] == mids[b] || rank(mids[a]) != rank(mids[b])) continue;
                CHECK_FALSE(proj_leq(mids[a], mids[b]));
            }
    }
}
