#include <doctest.h>

#include "sharp/inverses.hpp"
#include "sharp/oracle.hpp"
#include "sharp/order.hpp"

using namespace sharp;

namespace {

std::vector<Gaussian> grid(std::initializer_list<long> v) {
    std::vector<Gaussian> g;
    for (long x : v) g.emplace_back(x);
    return g;
}

Matrix diag(long a, long b) { return Matrix::diagonal({Gaussian(a), Gaussian(b)}); }

bool contains(const std::vector<Matrix>& pool, const Matrix& m) {
    for (const auto& x : pool)
        if (x == m) return true;
    return false;
}

}  // namespace

TEST_CASE("enumerate_index1 small cases") {
    const auto one = enumerate_index1(1, grid({0, 1}));
    REQUIRE(one.size() == 2);
    CHECK(one[0] == Matrix::exact({{0}}));
    CHECK(one[1] == Matrix::exact({{1}}));

    // Independent count: a 2×2 matrix has index ≤ 1 unless it is nilpotent and nonzero.
    const auto g = grid({-1, 0, 1});
    std::size_t expected = 0;
    for (long a : {-1, 0, 1})
        for (long b : {-1, 0, 1})
            for (long c : {-1, 0, 1})
                for (long d : {-1, 0, 1}) {
                    const bool nilpotent = a + d == 0 && a * d - b * c == 0;
                    const bool zero = a == 0 && b == 0 && c == 0 && d == 0;
                    if (!nilpotent || zero) ++expected;
                }
    const auto all = enumerate_index1(2, g);
    CHECK(all.size() == expected);
    for (const auto& m : all) CHECK(index_le_one(m));
    for (std::size_t i = 1; i < all.size(); ++i) CHECK_FALSE(all[i - 1] == all[i]);

    const auto bin = enumerate_index1(2, grid({0, 1}));
    std::size_t projectors = 0;
    for (const auto& m : bin) projectors += is_projector(m) ? 1 : 0;
    // O, I, and the rank-one ones: trace 1 with bc = 0, three (b, c) choices per diagonal.
    CHECK(projectors == 8);
}

TEST_CASE("enumerate_index1 limits") {
    auto code_of = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvariantViolated;
    };
    CHECK(code_of([] { enumerate_index1(3, grid({-2, -1, 0, 1, 2, 3}), 1000); }) == ErrorCode::BudgetExceeded);
    CHECK(code_of([] { enumerate_index1(4, grid({0, 1})); }) == ErrorCode::InvalidArgument);
    CHECK(enumerate_index1(3, grid({0, 1})).size() > 0);
}

TEST_CASE("brute_common_lower_bounds") {
    const auto universe = enumerate_index1(2, grid({0, 1, 2}));
    const Matrix b = diag(1, 2);
    const auto lbs = brute_common_lower_bounds(b, b, universe);
    CHECK(contains(lbs, diag(0, 0)));
    CHECK(contains(lbs, diag(1, 0)));
    CHECK(contains(lbs, diag(0, 2)));
    CHECK(contains(lbs, diag(1, 2)));
    for (const auto& a : lbs) CHECK(sharp_leq(a, b));

    const auto disjoint = brute_common_lower_bounds(diag(1, 2), Matrix::exact({{0, 1}, {1, 1}}), universe);
    REQUIRE(disjoint.size() == 1);
    CHECK(disjoint[0].is_zero());
}

TEST_CASE("verify_glb and Universe agree") {
    const auto members = enumerate_index1(2, grid({0, 1, 2}));
    const Universe u(members);
    CHECK(verify_glb(diag(1, 0), diag(1, 2), diag(1, 1), members));
    CHECK_FALSE(verify_glb(diag(0, 0), diag(1, 2), diag(1, 2), members));
    CHECK(verify_glb(diag(1, 2), diag(1, 2), diag(1, 2), members));
    for (std::size_t i = 0; i < u.size(); i += 7)
        for (std::size_t k = 0; k < u.size(); k += 5) {
            const Matrix& b1 = u.members()[i];
            const Matrix& b2 = u.members()[k];
            CHECK(u.common_lower_bounds(i, k).size() == brute_common_lower_bounds(b1, b2, members).size());
            for (std::size_t g : u.glbs_in_universe(i, k)) {
                CHECK(u.verify_glb(u.members()[g], i, k));
                CHECK(verify_glb(u.members()[g], b1, b2, members));
            }
        }
}

TEST_CASE("commuting idempotents") {
    CHECK(enumerate_commuting_idempotents(Matrix::identity(2, Mode::exact), grid({0, 1})).size() == 8);
    CHECK(enumerate_commuting_idempotents(diag(1, 2), grid({-1, 0, 1, 2})).size() == 4);
}
