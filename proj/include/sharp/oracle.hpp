#pragma once

#include <cstdint>
#include <vector>

#include "sharp/matrix.hpp"

namespace sharp {

constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Every n×n exact matrix with entries from grid and index ≤ 1, in
/// lexicographic order of the row-major entry indices into grid.
/// BudgetExceeded when |grid|^(n²) exceeds cap; InvalidArgument for n > 3.
std::vector<Matrix> enumerate_index1(std::size_t n, const std::vector<Gaussian>& grid,
                                     std::uint64_t cap = kDefaultEnumerationCap);

/// Members A of the universe with A ≤# B1 and A ≤# B2.
std::vector<Matrix> brute_common_lower_bounds(const Matrix& b1, const Matrix& b2, const std::vector<Matrix>& universe);

/// candidate is a common lower bound and dominates every common lower bound
/// in the universe.
bool verify_glb(const Matrix& candidate, const Matrix& b1, const Matrix& b2, const std::vector<Matrix>& universe);

/// Enumerated matrices with their sharp-order relation tabulated once.
class Universe {
public:
    explicit Universe(std::vector<Matrix> members);

    const std::vector<Matrix>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool leq(std::size_t i, std::size_t k) const { return table_[i * members_.size() + k] != 0; }
    std::vector<std::size_t> common_lower_bounds(std::size_t i, std::size_t k) const;
    /// verify_glb for members i and k, reusing the table for the lower bounds.
    bool verify_glb(const Matrix& candidate, std::size_t i, std::size_t k) const;
    /// Members that are greatest lower bounds of members i and k.
    std::vector<std::size_t> glbs_in_universe(std::size_t i, std::size_t k) const;

private:
    std::vector<Matrix> members_;
    std::vector<char> table_;
};

/// All n×n grid matrices S with S² = S and BS = SB (B exact).
std::vector<Matrix> enumerate_commuting_idempotents(const Matrix& b, const std::vector<Gaussian>& grid,
                                                    std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace sharp
