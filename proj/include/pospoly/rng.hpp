#pragma once

#include <cstdint>
#include <random>

namespace pospoly {

/// Thin deterministic RNG. Only the raw mt19937_64 stream is used (the
/// engine's output sequence is pinned by the standard), so the same seed
/// reproduces the same draws regardless of the standard library's
/// distribution implementations.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t next() { return eng(); }

    /// Uniform in [0, n). Modulo bias is irrelevant at the ranges used here.
    long long below(long long n) { return static_cast<long long>(next() % static_cast<std::uint64_t>(n)); }

    /// Uniform in [lo, hi] inclusive.
    long long in(long long lo, long long hi) { return lo + below(hi - lo + 1); }

    bool percent(int pct) { return below(100) < pct; }
};

}  // namespace pospoly
