#include "eqca/classical.hpp"

#include <cmath>

namespace eqca {

namespace {

std::size_t table_size(int n, std::size_t r) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < r; ++i) {
        if (size > (std::size_t(1) << 24) / std::size_t(n))
            throw std::invalid_argument("rule table too large (n^r exceeds 2^24)");
        size *= std::size_t(n);
    }
    return size;
}

}  // namespace

ClassicalRule::ClassicalRule(int n, Neighborhood nb, std::vector<int> chi)
    : n_(n), nb_(std::move(nb)), chi_(std::move(chi)) {
    if (n_ < 1) throw std::invalid_argument("alphabet size must be >= 1");
    if (chi_.size() != table_size(n_, nb_.r()))
        throw std::invalid_argument("rule table size must be n^r");
    for (int s : chi_)
        if (s < 1 || s > n_) throw std::invalid_argument("rule table entry out of range");
    // The all-quiescent window is entry 0; quiescence demands it maps to q.
    if (chi_[0] != kQuiescent)
        throw std::invalid_argument(
            "quiescence: rule must map the all-quiescent window to the quiescent state");
}

int ClassicalRule::apply_window(const std::vector<int>& window) const {
    std::size_t idx = 0;
    for (int s : window) idx = idx * std::size_t(n_) + std::size_t(s - 1);
    return chi_[idx];
}

ClassicalRule ClassicalRule::identity(int n, Neighborhood nb) {
    const std::size_t z = nb.zero_index();
    const std::size_t r = nb.r();
    std::size_t size = table_size(n, r);
    std::vector<int> chi(size);
    for (std::size_t idx = 0; idx < size; ++idx) {
        std::size_t rest = idx;
        int center = 1;
        for (std::size_t i = r; i-- > 0;) {
            int digit = int(rest % std::size_t(n));
            rest /= std::size_t(n);
            if (i == z) center = digit + 1;
        }
        chi[idx] = center;
    }
    return ClassicalRule(n, std::move(nb), std::move(chi));
}

Config step(const Config& cfg, const ClassicalRule& rule) {
    Config out;
    if (cfg.empty()) return out;
    if (cfg.dim() != rule.neighborhood().dim())
        throw std::invalid_argument("configuration and rule dimensions differ");
    if (cfg.max_symbol() > rule.n())
        throw std::invalid_argument("configuration symbol outside the rule alphabet");
    std::vector<int> window(rule.neighborhood().r());
    for (const auto& c : grow(cfg.support(), rule.neighborhood())) {
        const auto cells = neighborhood_of(c, rule.neighborhood());
        for (std::size_t i = 0; i < cells.size(); ++i) window[i] = cfg.get(cells[i]);
        out.set(c, rule.apply_window(window));
    }
    return out;
}

Config evolve(const Config& cfg, const ClassicalRule& rule, const Nat& k) {
    require_nat(k, "evolve");
    Config current = cfg;
    for (Nat i = 0; i < k; ++i) current = step(current, rule);
    return current;
}

double config_index_bits_estimate(const Config& cfg) {
    if (cfg.empty()) return 1.0;
    Nat max_index = 0;
    for (const auto& [c, s] : cfg.cells()) max_index = std::max(max_index, codec::coord_index(c));
    double len = mpz_fits_ulong_p(max_index.get_mpz_t())
                     ? double(max_index.get_ui()) + 1.0
                     : 1e18;
    if (len > 1e9) return 4.6e18;
    double entry_bits = std::log2(double(cfg.max_symbol()) + 1.0);
    return codec::seq_encode_bits_estimate(std::size_t(len), entry_bits);
}

Nat config_index(const Config& cfg) {
    if (cfg.empty()) return 0;
    if (config_index_bits_estimate(cfg) > codec::kMaxEncodedBits)
        throw std::invalid_argument("config_index: encoded index exceeds the size budget");
    const std::size_t d = cfg.dim();
    Nat max_index = 0;
    for (const auto& [c, s] : cfg.cells()) max_index = std::max(max_index, codec::coord_index(c));
    std::size_t len = to_size(max_index + 1, std::size_t(1) << 26, "config_index");
    std::vector<Nat> seq(len);
    for (std::size_t k = 0; k < len; ++k) seq[k] = cfg.get(codec::coord_unindex(Nat(long(k)), d));
    return codec::seq_encode(seq);
}

Config config_unindex(const Nat& a, std::size_t d) {
    Config out;
    const auto seq = codec::seq_decode(a);
    if (!seq.empty() && seq.back() == 1)
        throw std::invalid_argument("config index has trailing quiescent symbols");
    for (std::size_t k = 0; k < seq.size(); ++k) {
        if (seq[k] < 1)
            throw std::invalid_argument("config index contains symbol 0");
        if (seq[k] == 1) continue;
        out.set(codec::coord_unindex(Nat(long(k)), d),
                int(to_size(seq[k], 1u << 24, "config_unindex symbol")));
    }
    return out;
}

}  // namespace eqca
