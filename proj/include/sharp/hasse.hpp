#pragma once

#include <cstdint>
#include <string>

#include "sharp/jordan.hpp"

namespace sharp {

constexpr std::size_t kMaxHasseNodes = 64;

/// DOT digraph (edges low → high) of a finite skeleton of δ: the Boolean
/// center plus, for every eigenvalue with two or more Jordan blocks, up to
/// antichain_samples sampled projectors of intermediate rank on that
/// eigenvalue and an ellipsis node standing for the rest. Edges are the
/// covering relations among the emitted projectors. PrecondViolated when the
/// skeleton would exceed kMaxHasseNodes nodes.
std::string render_hasse(const JordanSpec& spec, std::uint64_t seed, std::size_t antichain_samples = 3);

}  // namespace sharp
