#pragma once

#include <cstdint>
#include <random>

#include "eqca/numbers.hpp"

namespace eqca {

/// Deterministic seeded generator. mt19937_64 output is fully specified by
/// the standard, so sequences are identical across platforms and runs.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : g_(seed) {}

    std::uint64_t next() { return g_(); }

    /// Unbiased draw in [0, k).
    std::uint64_t below(std::uint64_t k) {
        if (k == 0) throw std::invalid_argument("below(0)");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % k;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % k;
    }

    /// Inclusive range.
    long range(long lo, long hi) {
        return lo + long(below(std::uint64_t(hi - lo + 1)));
    }

    bool coin() { return next() & 1u; }

    /// Exact dyadic rational uniform on [0, 1).
    Rat unit_rational() {
        Rat r(Int(next()), Int(1) << 64);
        r.canonicalize();
        return r;
    }

private:
    std::mt19937_64 g_;
};

}  // namespace eqca
