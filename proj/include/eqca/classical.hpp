#pragma once

#include <vector>

#include "eqca/codec.hpp"
#include "eqca/config.hpp"
#include "eqca/lattice.hpp"

namespace eqca {

/// A finite state alphabet {1..n} with symbol 1 quiescent.
struct Alphabet {
    int n = 1;
    explicit Alphabet(int size) : n(size) {
        if (n < 1) throw std::invalid_argument("alphabet size must be >= 1");
    }
};

/// A deterministic local rule: a neighborhood of r offsets and a total
/// transition table chi : S^r -> S with chi(q,...,q) = q. The table is flat,
/// row-major over neighborhood-ordered tuples with the first offset most
/// significant (entry index = sum (s_i - 1) * n^(r-1-i)).
class ClassicalRule {
public:
    ClassicalRule(int n, Neighborhood nb, std::vector<int> chi);

    int n() const { return n_; }
    const Neighborhood& neighborhood() const { return nb_; }
    const std::vector<int>& chi() const { return chi_; }

    int apply_window(const std::vector<int>& window) const;

    /// The rule mapping every window to its center symbol.
    static ClassicalRule identity(int n, Neighborhood nb);

private:
    int n_;
    Neighborhood nb_;
    std::vector<int> chi_;
};

/// One synchronous update: result(c) = chi(cfg(c+s1),...,cfg(c+sr)).
/// Evaluates only over grow(support); all other cells have all-quiescent
/// windows and stay quiescent.
Config step(const Config& cfg, const ClassicalRule& rule);

/// k-fold composition of step; k = 0 returns cfg.
Config evolve(const Config& cfg, const ClassicalRule& rule, const Nat& k);

/// The sequence index of a configuration: enumerate cells by coordinate
/// index, truncate trailing quiescent symbols, seq_encode the rest. The
/// index of the all-quiescent configuration is 0. Throws when the encoded
/// index would exceed the representable size budget.
Nat config_index(const Config& cfg);

/// Inverse of config_index for lattice dimension d.
Config config_unindex(const Nat& a, std::size_t d);

/// Upper estimate (base-2 log) of config_index's size; usable as a cheap
/// feasibility check before attempting the encoding.
double config_index_bits_estimate(const Config& cfg);

}  // namespace eqca
