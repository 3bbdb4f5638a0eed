#include "eqca/gallery.hpp"

#include "eqca/classical.hpp"
#include "eqca/config.hpp"
#include "eqca/qca.hpp"
#include "eqca/rng.hpp"

namespace eqca::gallery {

namespace {

// Symbols of the three-letter alphabet {q, 0, 1} used by the classical demos.
constexpr int kSymZero = 2;
constexpr int kSymOne = 3;

int sym_for_bit(int bit) { return bit ? kSymOne : kSymZero; }
int bit_for_sym(int sym) { return sym == kSymOne ? 1 : 0; }
int negate_sym(int sym) {
    if (sym == kSymZero) return kSymOne;
    if (sym == kSymOne) return kSymZero;
    return sym;
}

bool check_matches(const std::vector<RecoveredBit>& bits, const Oracle& oracle) {
    for (const auto& b : bits)
        if (b.bit != oracle.bit(b.index)) return false;
    return true;
}

}  // namespace

Oracle Oracle::primality() {
    return {"primality", [](std::uint64_t i) {
                if (i < 2) return 0;
                for (std::uint64_t d = 2; d * d <= i; ++d)
                    if (i % d == 0) return 0;
                return 1;
            }};
}

Oracle Oracle::parity() {
    return {"parity", [](std::uint64_t i) { return int(i % 2); }};
}

Oracle Oracle::bitstring(const std::string& bits) {
    for (char c : bits)
        if (c != '0' && c != '1')
            throw std::invalid_argument("bitstring oracle accepts only 0s and 1s");
    return {"bitstring:" + bits, [bits](std::uint64_t i) {
                return i < bits.size() ? bits[std::size_t(i)] - '0' : 0;
            }};
}

Oracle Oracle::all_zeros() {
    return {"all-zeros", [](std::uint64_t) { return 0; }};
}

Oracle Oracle::all_ones() {
    return {"all-ones", [](std::uint64_t) { return 1; }};
}

DemoResult demo_space_inhomogeneous(const Oracle& oracle,
                                    const std::vector<std::uint64_t>& indices,
                                    bool hypothesis_restored) {
    DemoResult out;
    out.demo = "space-inhomogeneous";
    for (std::uint64_t i : indices) {
        Config cfg;
        cfg.set(CellCoord{long(i)}, kSymZero);
        // The dynamics negates the content of cell j iff U(j) = 1. Restoring
        // homogeneity forces the same rule at every cell (identity here).
        Config image;
        for (const auto& [cell, sym] : cfg.cells()) {
            const std::uint64_t j = cell.c[0].get_ui();
            const int u = hypothesis_restored ? 0 : oracle.bit(j);
            image.set(cell, u ? negate_sym(sym) : sym);
        }
        out.recovered.push_back({i, bit_for_sym(image.get(CellCoord{long(i)})),
                                 "space-inhomogeneous readout"});
    }
    out.matches_oracle = check_matches(out.recovered, oracle);
    return out;
}

DemoResult demo_time_inhomogeneous(const Oracle& oracle, std::uint64_t steps,
                                   bool hypothesis_restored) {
    DemoResult out;
    out.demo = "time-inhomogeneous";
    const CellCoord cell{0};
    Config cfg;
    cfg.set(cell, kSymZero);
    for (std::uint64_t t = 0; t < steps; ++t) {
        const int before = cfg.get(cell);
        const int u = hypothesis_restored ? 0 : oracle.bit(t);
        Config next;
        for (const auto& [c, sym] : cfg.cells()) next.set(c, u ? negate_sym(sym) : sym);
        cfg = next;
        out.recovered.push_back({t, cfg.get(cell) != before ? 1 : 0, "time-step flip"});
    }
    out.matches_oracle = check_matches(out.recovered, oracle);
    return out;
}

DemoResult demo_unbounded_density(const Oracle& oracle, std::uint64_t m,
                                  bool hypothesis_restored) {
    DemoResult out;
    out.demo = "unbounded-density";
    std::uint64_t members = 0, non_members = 0;
    for (std::uint64_t k = 0; k <= m; ++k) {
        std::uint64_t image;
        if (hypothesis_restored) {
            image = k;  // finite-alphabet identity dynamics carries no oracle
        } else if (oracle.bit(k)) {
            image = 2 * members++;
        } else {
            image = 2 * non_members++ + 1;
        }
        const int bit = hypothesis_restored ? 0 : (image % 2 == 0 ? 1 : 0);
        out.recovered.push_back({k, bit, "enumeration parity"});
    }
    out.matches_oracle = check_matches(out.recovered, oracle);
    return out;
}

DemoResult demo_unbounded_velocity(const Oracle& oracle, std::uint64_t i, int x,
                                   bool hypothesis_restored) {
    if (x != 0 && x != 1)
        throw std::domain_error("segment head must be 0 or 1");
    DemoResult out;
    out.demo = "unbounded-velocity";
    Config cfg;
    cfg.set(CellCoord{0}, sym_for_bit(x));
    for (std::uint64_t k = 1; k <= i; ++k) cfg.set(CellCoord{long(k)}, kSymOne);

    // The non-local map reads the full run length in one step.
    const int head = cfg.get(CellCoord{0});
    if (head != kSymZero && head != kSymOne)
        throw std::domain_error("malformed segment: head cell is quiescent");
    std::uint64_t run = 0;
    while (cfg.get(CellCoord{long(run + 1)}) == kSymOne) ++run;
    if (cfg.get(CellCoord{long(run + 1)}) != kQuiescent)
        throw std::domain_error("malformed segment: run of 1s not followed by q");
    const int u = hypothesis_restored ? 0 : oracle.bit(run);
    const int image = u ? negate_sym(head) : head;

    out.recovered.push_back({i, image != sym_for_bit(x) ? 1 : 0, "segment head flip"});
    out.matches_oracle = check_matches(out.recovered, oracle);
    return out;
}

DemoResult demo_nonquiescent_input(const Oracle& oracle, std::uint64_t width,
                                   bool hypothesis_restored) {
    DemoResult out;
    out.demo = "nonquiescent-input";
    Config cfg;
    if (!hypothesis_restored)
        for (std::uint64_t k = 0; k < width; ++k)
            cfg.set(CellCoord{long(k)}, sym_for_bit(oracle.bit(k)));
    // Trivial dynamics: a genuine (homogeneous, local, quiescence-preserving)
    // identity rule.
    const ClassicalRule trivial = ClassicalRule::identity(3, Neighborhood::moore(1));
    const Config evolved = width > 0 ? evolve(cfg, trivial, Nat(1)) : cfg;
    for (std::uint64_t k = 0; k < width; ++k)
        out.recovered.push_back(
            {k, bit_for_sym(evolved.get(CellCoord{long(k)})), "planted input readout"});
    out.matches_oracle = check_matches(out.recovered, oracle);
    return out;
}

namespace {

// sqrt(w) for the amplitudes the extraction demo needs: w a rational square,
// or 2w a rational square in a field containing 1/sqrt(2).
Scalar sqrt_in_field(const FieldSpec* spec, const Scalar& w) {
    if (w.is_zero()) return spec->zero();
    if (!w.is_rational())
        throw std::domain_error("sqrt(1-u^2) is not representable in this field");
    const Rat& value = w.rational_value();
    if (value < 0) throw std::domain_error("cannot take sqrt of a negative amplitude");
    auto rational_sqrt = [](const Rat& v) -> std::pair<bool, Rat> {
        Int num_root = sqrt(v.get_num());
        Int den_root = sqrt(v.get_den());
        if (num_root * num_root == v.get_num() && den_root * den_root == v.get_den())
            return {true, make_rat(num_root, den_root)};
        return {false, Rat(0)};
    };
    if (auto [ok, root] = rational_sqrt(value); ok) return spec->from_rational(root);
    // Try r / sqrt(2): works when 2w is a rational square and the field has
    // an element h with h^2 = 1/2 (e.g. (g - g^3)/2 in Q(zeta_8)).
    if (auto [ok, root] = rational_sqrt(value * 2); ok && spec->degree() >= 4) {
        Scalar g = spec->generator();
        Scalar h = spec->from_rational(Rat(1, 2)) * (g - pow(g, 3));
        if (h * h == spec->from_rational(Rat(1, 2)))
            return spec->from_rational(root) * h;
    }
    throw std::domain_error("sqrt(1-u^2) is not representable in this field");
}

int sign_of_real(const Scalar& a) {
    if (a.is_zero()) return 0;
    Rat eps(1, 16);
    for (int i = 0; i < 128; ++i) {
        RatInterval v = approx_real(a, eps);
        if (v.lo > 0) return 1;
        if (v.hi < 0) return -1;
        eps /= 1024;
    }
    throw std::logic_error("sign determination failed to converge");
}

}  // namespace

ScalarExtractionResult demo_scalar_extraction(const Scalar& u, unsigned long samples,
                                              std::uint64_t seed) {
    const FieldSpec* spec = u.spec;
    if (spec == nullptr) throw std::invalid_argument("scalar without field");
    if (!is_real(u)) throw std::domain_error("amplitude u must be real");
    if (sign_of_real(u) <= 0) throw std::domain_error("amplitude u must be positive");
    const Scalar one = spec->one();
    if (sign_of_real(one - u) < 0) throw std::domain_error("amplitude u must be <= 1");

    const Scalar s = sqrt_in_field(spec, one - u * u);
    ScalarMatrix n_gate(spec, 2, 2);
    n_gate.at(0, 0) = u;
    n_gate.at(0, 1) = s;
    n_gate.at(1, 0) = s;
    n_gate.at(1, 1) = -u;
    if (!n_gate.is_unitary()) throw std::logic_error("extraction gate not unitary");

    // |0> is the quiescent basis vector of a 2-state cell at the origin.
    const CellCoord cell{0};
    DoubledState psi = embed_primary(StateVector::basis(spec, Config{}), 2);
    psi.sv = apply_window(lift_primary_unitary(n_gate, 2), {cell}, 4, psi.sv);

    const auto histogram = measure_cell(psi, cell, seed, samples);
    ScalarExtractionResult out;
    const Scalar p0 = abs_sq(u);
    if (!p0.is_rational()) throw std::logic_error("p(0) should be rational here");
    out.exact_p0 = p0.rational_value();
    out.estimate = make_rat(Int(histogram.at(1)), Int(samples));
    out.samples = samples;
    out.seed = seed;
    return out;
}

DemoResult demo_stochastic_correlation(const Oracle& oracle, std::uint64_t i,
                                       unsigned long samples, std::uint64_t seed,
                                       bool hypothesis_restored) {
    if (samples == 0) throw std::invalid_argument("need at least one sample");
    DemoResult out;
    out.demo = "stochastic-correlation";
    const int u = oracle.bit(i);
    DetRng rng(seed);
    unsigned long agree = 0;
    for (unsigned long s = 0; s < samples; ++s) {
        int left, right;
        if (hypothesis_restored) {
            // Unitarity restored: a deterministic evolution, here the
            // identity on both zeros.
            left = right = 0;
        } else if (u == 1) {
            left = right = rng.coin() ? 1 : 0;
        } else {
            left = rng.coin() ? 1 : 0;
            right = rng.coin() ? 1 : 0;
        }
        if (left == right) ++agree;
    }
    const Rat frequency = make_rat(Int(agree), Int(samples));
    const int bit = frequency > Rat(9, 10) ? 1 : 0;
    out.recovered.push_back({i, bit, "correlation threshold"});
    out.matches_oracle = check_matches(out.recovered, oracle);
    out.extra.emplace_back("agreement", format_rat(frequency));
    return out;
}

}  // namespace eqca::gallery
