#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "rainbow/binomial.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

// ============================================================================
// deterministic randomness
// ============================================================================
//
// All randomness in this library flows through SplitMix64 (Steele, Lea &
// Flood's 64-bit mixer). The algorithm is fixed here on purpose: identical
// seeds must give identical instances on every platform and toolchain, which
// rules out std::uniform_int_distribution (its output is
// implementation-defined). Bounded draws use rejection from the top, so they
// are exact and unbiased.

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    auto next() -> std::uint64_t
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform on [0, bound); bound must be positive
    auto below(std::uint64_t bound) -> std::uint64_t
    {
        if (bound == 0)
            throw InputError("SplitMix64::below: bound must be positive");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t draw;
        do
            draw = next();
        while (draw >= limit);
        return draw % bound;
    }

private:
    std::uint64_t state_;
};

// Child-stream seeds: derive(seed, i) = one SplitMix64 step of
// seed ^ (0x9E3779B97F4A7C15 * (i + 1)). Used to split a base seed into
// per-grid-point, per-trial and per-member streams without correlation.
inline auto derive_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t
{
    SplitMix64 gen(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    return gen.next();
}

// Floyd's algorithm: m distinct values sampled uniformly from [0, population),
// returned sorted ascending. Exactly m membership insertions, no open-ended
// rejection loop over the value space.
inline auto sample_distinct(SplitMix64 & gen, Count population, Count m) -> std::vector<Count>
{
    if (m < 0 || population < 0 || m > population)
        throw InputError("sample_distinct: need 0 <= m <= population");
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(m));
    for (Count j = population - m; j < population; ++j) {
        const std::uint64_t t = gen.below(static_cast<std::uint64_t>(j) + 1);
        if (! chosen.insert(t).second)
            chosen.insert(static_cast<std::uint64_t>(j));
    }
    std::vector<Count> result(chosen.begin(), chosen.end());
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace rainbow
