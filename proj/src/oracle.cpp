#include "sharp/oracle.hpp"

#include "sharp/inverses.hpp"
#include "sharp/order.hpp"

namespace sharp {

namespace {

std::uint64_t count_or_throw(std::size_t n, std::size_t g, std::uint64_t cap) {
    if (n == 0 || n > 3) throw Error(ErrorCode::InvalidArgument, "enumeration supports 1 ≤ n ≤ 3");
    if (g == 0) throw Error(ErrorCode::InvalidArgument, "empty grid");
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n * n; ++i) {
        if (total > cap / g + 1) throw Error(ErrorCode::BudgetExceeded, "grid enumeration exceeds the budget");
        total *= g;
    }
    if (total > cap) throw Error(ErrorCode::BudgetExceeded, "grid enumeration exceeds the budget");
    return total;
}

// Calls f on every grid matrix, last entry varying fastest.
template <class F>
void for_each_grid_matrix(std::size_t n, const std::vector<Gaussian>& grid, std::uint64_t cap, F&& f) {
    const std::uint64_t total = count_or_throw(n, grid.size(), cap);
    const std::size_t cells = n * n;
    std::vector<std::size_t> idx(cells, 0);
    Matrix::ExactData data(cells, grid[0]);
    for (std::uint64_t c = 0; c < total; ++c) {
        f(Matrix::exact(n, n, data));
        for (std::size_t k = cells; k-- > 0;) {
            if (++idx[k] < grid.size()) {
                data[k] = grid[idx[k]];
                break;
            }
            idx[k] = 0;
            data[k] = grid[0];
        }
    }
}

}  // namespace

std::vector<Matrix> enumerate_index1(std::size_t n, const std::vector<Gaussian>& grid, std::uint64_t cap) {
    std::vector<Matrix> out;
    for_each_grid_matrix(n, grid, cap, [&](Matrix m) {
        if (index_le_one(m)) out.push_back(std::move(m));
    });
    return out;
}

std::vector<Matrix> brute_common_lower_bounds(const Matrix& b1, const Matrix& b2, const std::vector<Matrix>& universe) {
    std::vector<Matrix> out;
    for (const auto& a : universe)
        if (sharp_leq(a, b1) && sharp_leq(a, b2)) out.push_back(a);
    return out;
}

bool verify_glb(const Matrix& candidate, const Matrix& b1, const Matrix& b2, const std::vector<Matrix>& universe) {
    if (!index_le_one(candidate) || !sharp_leq(candidate, b1) || !sharp_leq(candidate, b2)) return false;
    for (const auto& a : brute_common_lower_bounds(b1, b2, universe))
        if (!sharp_leq(a, candidate)) return false;
    return true;
}

Universe::Universe(std::vector<Matrix> members) : members_(std::move(members)) {
    const std::size_t n = members_.size();
    table_.assign(n * n, 0);
    // Square and product tables make each relation check two comparisons.
    std::vector<Matrix> squares;
    squares.reserve(n);
    for (const auto& m : members_) squares.push_back(m * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Matrix ab = members_[i] * members_[k];
            table_[i * n + k] = ab == squares[i] && ab == members_[k] * members_[i];
        }
}

std::vector<std::size_t> Universe::common_lower_bounds(std::size_t i, std::size_t k) const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < members_.size(); ++a)
        if (leq(a, i) && leq(a, k)) out.push_back(a);
    return out;
}

bool Universe::verify_glb(const Matrix& candidate, std::size_t i, std::size_t k) const {
    if (!index_le_one(candidate) || !sharp_leq(candidate, members_[i]) || !sharp_leq(candidate, members_[k]))
        return false;
    for (std::size_t a : common_lower_bounds(i, k))
        if (!sharp_leq(members_[a], candidate)) return false;
    return true;
}

std::vector<std::size_t> Universe::glbs_in_universe(std::size_t i, std::size_t k) const {
    const auto lower = common_lower_bounds(i, k);
    std::vector<std::size_t> out;
    for (std::size_t c : lower) {
        bool dominates = true;
        for (std::size_t a : lower) dominates = dominates && leq(a, c);
        if (dominates) out.push_back(c);
    }
    return out;
}

std::vector<Matrix> enumerate_commuting_idempotents(const Matrix& b, const std::vector<Gaussian>& grid,
                                                    std::uint64_t cap) {
    require_square(b, "enumerate_commuting_idempotents");
    if (b.mode() != Mode::exact) throw Error(ErrorCode::NotSupported, "oracle runs in exact mode");
    std::vector<Matrix> out;
    for_each_grid_matrix(b.rows(), grid, cap, [&](Matrix s) {
        if (s * s == s && b * s == s * b) out.push_back(std::move(s));
    });
    return out;
}

}  // namespace sharp
