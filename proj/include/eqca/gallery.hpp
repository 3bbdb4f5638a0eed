#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "eqca/field.hpp"
#include "eqca/numbers.hpp"

namespace eqca::gallery {

/// A pluggable total predicate standing in for an undecidable set: each demo
/// shows that its oracle's bits pass through the dynamics once a physical
/// hypothesis is dropped, which is exactly the information-flow structure of
/// the counter-examples. Built-ins are computable so recovery is checkable.
struct Oracle {
    std::string name;
    std::function<int(std::uint64_t)> bit;

    static Oracle primality();
    static Oracle parity();
    static Oracle bitstring(const std::string& bits);
    static Oracle all_zeros();
    static Oracle all_ones();
};

struct RecoveredBit {
    std::uint64_t index = 0;
    int bit = 0;
    std::string method;
};

struct DemoResult {
    std::string demo;
    std::vector<RecoveredBit> recovered;
    bool matches_oracle = false;
    /// Demo-specific extras, serialized into the JSON result.
    std::vector<std::pair<std::string, std::string>> extra;
};

/// Space-dependent dynamics: cell i is negated iff U(i) = 1. Planting 0 at
/// cell i and reading the image recovers U(i). With the hypothesis restored
/// the rule is the same at every cell and recovers nothing.
DemoResult demo_space_inhomogeneous(const Oracle& oracle,
                                    const std::vector<std::uint64_t>& indices,
                                    bool hypothesis_restored = false);

/// Time-dependent dynamics: step i negates every cell iff U(i) = 1; the bit
/// is read off the change between consecutive steps.
DemoResult demo_time_inhomogeneous(const Oracle& oracle, std::uint64_t steps,
                                   bool hypothesis_restored = false);

/// Unbounded per-cell state space (alphabet N): the single-cell dynamics
/// applies the enumeration map sending the j-th member of U to 2j and the
/// j-th non-member to 2j+1; parity of the image recovers membership.
DemoResult demo_unbounded_density(const Oracle& oracle, std::uint64_t m,
                                  bool hypothesis_restored = false);

/// Unbounded signalling speed: a map on segments q x 1^i q negates the head
/// bit x iff U(i) = 1, no matter how long the run of 1s is.
DemoResult demo_unbounded_velocity(const Oracle& oracle, std::uint64_t i, int x,
                                   bool hypothesis_restored = false);

/// Non-quiescent initial data: the input configuration itself carries the
/// oracle bits and a trivial identity dynamics hands them back.
DemoResult demo_nonquiescent_input(const Oracle& oracle, std::uint64_t width,
                                   bool hypothesis_restored = false);

struct ScalarExtractionResult {
    Rat exact_p0;        // |u|^2
    Rat estimate;        // empirical frequency of outcome 0
    unsigned long samples = 0;
    std::uint64_t seed = 0;
};

/// Amplitude extraction: prepares |0>, applies the single-cell unitary built
/// from the amplitude pair (u, sqrt(1-u^2)), and estimates p(0) = |u|^2 by
/// seeded sampling. Requires sqrt(1-u^2) to be representable in the field.
ScalarExtractionResult demo_scalar_extraction(const Scalar& u, unsigned long samples,
                                              std::uint64_t seed);

/// Stochastic correlations: both zeros of q0(1)^i 0q flip to fair coins that
/// are perfectly correlated iff U(i) = 1; the empirical agreement frequency
/// against a 0.9 threshold recovers the bit. With unitarity restored the
/// dynamics is deterministic and oracle-independent.
DemoResult demo_stochastic_correlation(const Oracle& oracle, std::uint64_t i,
                                       unsigned long samples, std::uint64_t seed,
                                       bool hypothesis_restored = false);

}  // namespace eqca::gallery
