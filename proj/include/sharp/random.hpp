#pragma once

#include <cstdint>
#include <random>

namespace sharp {

// The engine is fully specified by the standard; the std distributions are
// not, so draws are mapped by hand to keep outputs identical across
// standard libraries.
using Rng = std::mt19937_64;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng() % span);
}

inline bool coin(Rng& rng) { return (rng() >> 63) != 0; }

}  // namespace sharp
