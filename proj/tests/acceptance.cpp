// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria run at full scale, so this binary takes a few minutes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <vector>

#include "eqca/gallery.hpp"
#include "eqca/run.hpp"
#include "support/oracles.hpp"

using namespace eqca;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, double seconds) {
    std::printf("[%s] criterion %d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", number,
                name.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) ++failures;
}

template <typename F>
void criterion(int number, const std::string& name, F body) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    try {
        pass = body();
    } catch (const std::exception& e) {
        std::printf("  exception: %s\n", e.what());
        pass = false;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(number, name, pass, seconds);
}

const FieldSpec& F() { return FieldSpec::zeta8(); }

Scalar rand_scalar(DetRng& rng) {
    std::vector<Rat> c(4);
    for (auto& x : c) x = make_rat(Int(rng.range(-1000, 1000)), Int(rng.range(1, 1000)));
    return F().from_coeffs(std::move(c));
}

// ---------------------------------------------------------------------- 1

bool criterion_encodings() {
    for (long k = 0; k < (1 << 18); ++k) {
        auto [n, p] = codec::unpair(k);
        if (codec::pair(n, p) != k) return false;
    }
    for (std::size_t d = 1; d <= 3; ++d) {
        std::vector<long> v(d, -8);
        while (true) {
            std::vector<Int> comps(v.begin(), v.end());
            CellCoord c(comps);
            if (codec::coord_unindex(codec::coord_index(c), d) != c) return false;
            std::size_t i = d;
            bool done = true;
            while (i-- > 0) {
                if (v[i] < 8) {
                    ++v[i];
                    done = false;
                    break;
                }
                v[i] = -8;
            }
            if (done) break;
        }
    }
    std::set<Nat> seen;
    std::size_t total = 0;
    for (int len = 0; len <= 4; ++len) {
        std::vector<int> digits(len, 0);
        while (true) {
            std::vector<Nat> js(digits.begin(), digits.end());
            Nat k = codec::seq_encode(js);
            if (len > 0 && k == 0) return false;
            if (!seen.insert(k).second) return false;
            ++total;
            int i = len;
            bool done = true;
            while (i-- > 0) {
                if (digits[i] < 7) {
                    ++digits[i];
                    done = false;
                    break;
                }
                digits[i] = 0;
            }
            if (done) break;
        }
    }
    return total == 4681 && seen.size() == total;
}

// ---------------------------------------------------------------------- 2

bool criterion_field() {
    DetRng rng(42);
    for (int i = 0; i < 10000; ++i) {
        Scalar a = rand_scalar(rng), b = rand_scalar(rng), c = rand_scalar(rng);
        if ((a + b) + c != a + (b + c)) return false;
        if ((a * b) * c != a * (b * c)) return false;
        if (a + b != b + a) return false;
        if (a * b != b * a) return false;
        if (a * (b + c) != a * b + a * c) return false;
        if (conj(a * b) != conj(a) * conj(b)) return false;
        if (conj(a + b) != conj(a) + conj(b)) return false;
        if (!a.is_zero() && a * inv(a) != F().one()) return false;
        Scalar s = abs_sq(a);
        if (conj(s) != s) return false;
        if ((s == F().zero()) != a.is_zero()) return false;
    }
    // approx_real containment against double evaluation
    const double pi4 = M_PI / 4;
    const Rat eps(1, 1 << 24);
    for (int i = 0; i < 1000; ++i) {
        Scalar a = rand_scalar(rng);
        Scalar re = a + conj(a);
        RatInterval v = approx_real(re, eps);
        if (v.width() > eps) return false;
        double x = 0;
        for (std::size_t k = 0; k < 4; ++k)
            x += re.c[k].get_d() * std::cos(double(k) * pi4);
        if (x < v.lo.get_d() - 1e-12 || x > v.hi.get_d() + 1e-12) return false;
    }
    return true;
}

// ---------------------------------------------------------------------- 3

bool criterion_classical_oracle() {
    DetRng rng(1001);
    for (int ri = 0; ri < 100; ++ri) {
        const int n = 2 + int(rng.below(2));  // n in {2, 3}
        Neighborhood nb = Neighborhood::moore(1);
        std::size_t size = std::size_t(n) * std::size_t(n) * std::size_t(n);
        std::vector<int> chi(size);
        for (auto& s : chi) s = 1 + int(rng.below(std::uint64_t(n)));
        chi[0] = 1;
        ClassicalRule rule(n, nb, chi);
        for (int ci = 0; ci < 100; ++ci) {
            Config cfg;
            for (long x = -3; x <= 2; ++x) {  // support width <= 6
                int s = 1 + int(rng.below(std::uint64_t(n)));
                if (s > 1) cfg.set(CellCoord{x}, s);
            }
            const long k = long(rng.below(5));
            testkit::DenseClassical1D oracle(cfg, -3 - k, 2 + k);
            Config sparse = cfg;
            for (long t = 0; t < k; ++t) {
                oracle.step(rule);
                sparse = step(sparse, rule);
            }
            if (sparse != oracle.to_config()) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------- 4

bool criterion_localop_oracle() {
    DetRng rng(2002);
    const std::vector<CellCoord> window{CellCoord{0}, CellCoord{1}, CellCoord{2},
                                        CellCoord{3}};
    for (int i = 0; i < 200; ++i) {
        const int n = 2 + int(rng.below(2));
        const std::size_t p = 1 + rng.below(2);
        std::vector<CellCoord> cells;
        while (cells.size() < p) {
            CellCoord c{rng.range(0, 3)};
            if (std::find(cells.begin(), cells.end(), c) == cells.end()) cells.push_back(c);
        }
        std::size_t dim = 1;
        for (std::size_t q = 0; q < p; ++q) dim *= std::size_t(n);
        ScalarMatrix mat(&F(), dim, dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c)
                if (rng.below(3) != 0)
                    mat.at(r, c) =
                        F().from_rational(make_rat(Int(rng.range(-2, 2)), Int(rng.range(1, 2)))) *
                        pow(F().generator(), rng.below(8));
        LocalMap op(n, cells, mat);
        StateVector u(&F());
        const int terms = 1 + int(rng.below(3));
        for (int t = 0; t < terms; ++t) {
            Config c;
            for (const auto& cell : window) {
                int s = 1 + int(rng.below(std::uint64_t(n)));
                if (s > 1) c.set(cell, s);
            }
            u.add_term(c, F().from_rational(make_rat(Int(rng.range(-3, 3)), Int(rng.range(1, 2)))));
        }
        StateVector engine = apply(op, u);
        if (engine != testkit::dense_local_apply(op, u, window)) return false;
        // exterior invariance on every output term
        for (const auto& [cfg, a] : engine.terms()) {
            Config ext = cfg;
            for (const auto& c : cells) ext.set(c, kQuiescent);
            bool found = false;
            for (const auto& [src, b] : u.terms()) {
                Config sext = src;
                for (const auto& c : cells) sext.set(c, kQuiescent);
                if (sext == ext) {
                    found = true;
                    break;
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------- 5

bool criterion_qca_engine() {
    DetRng rng(3003);
    const std::vector<CellCoord> window{CellCoord{-2}, CellCoord{-1}, CellCoord{0},
                                        CellCoord{1},  CellCoord{2},  CellCoord{3},
                                        CellCoord{4}};
    for (int ri = 0; ri < 100; ++ri) {
        ScalarMatrix u = random_exact_unitary_fixing_q(&F(), 2, rng);
        Neighborhood nb = rng.coin() ? Neighborhood({CellCoord{0}})
                                     : (rng.coin() ? Neighborhood({CellCoord{0}, CellCoord{1}})
                                                   : Neighborhood({CellCoord{-1}, CellCoord{0}}));
        QcaRule rule(2, nb, QcaRule::k_from_cell_unitary(u, nb));
        for (int si = 0; si < 20; ++si) {
            StateVector v = random_primary_state(
                &F(), 2, {CellCoord{0}, CellCoord{1}, CellCoord{2}, CellCoord{3}}, rng);
            DoubledState psi = embed_primary(v, 2);
            DoubledState out = qca_step(psi, rule);

            if (inner(out.sv, out.sv) != inner(psi.sv, psi.sv)) return false;

            const Region bound = grow(psi.sv.support(), nb);
            for (const auto& c : out.sv.support())
                if (!bound.contains(c)) return false;

            CellCoord tau{rng.range(-2, 2)};
            DoubledState shifted{2, psi.sv.translated(tau)};
            if (qca_step(shifted, rule).sv != out.sv.translated(tau)) return false;

            const Region active = grow(psi.sv.support(), nb);
            std::vector<CellCoord> forward(active.begin(), active.end());
            std::vector<CellCoord> backward(forward.rbegin(), forward.rend());
            if (!forward.empty() &&
                qca_step_ordered(psi, rule, forward) != qca_step_ordered(psi, rule, backward))
                return false;

            if (out.sv != testkit::dense_qca_step(psi, rule, window)) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------- 6

bool criterion_causality() {
    const std::vector<QcaRule> rules = [] {
        std::vector<QcaRule> out;
        out.push_back(QcaRule::swap_rule(&F(), 2, Neighborhood::moore(1)));
        ScalarMatrix phase = ScalarMatrix::identity(&F(), 2);
        phase.at(1, 1) = pow(F().generator(), 3);
        out.push_back(QcaRule::from_cell_unitary(phase, Neighborhood::moore(1)));
        out.push_back(QcaRule::left_shift(&F(), 2));
        return out;
    }();
    for (const auto& rule : rules) {
        CausalityReport r = check_causality(rule, 50, 20240810);
        if (!r.pass()) return false;
        if (r.trials != 50 || r.passes != 50) return false;
    }
    // planted non-causal fixture: swaps cells 0 and 3 under a radius-1 claim
    ScalarMatrix swap2(&F(), 16, 16);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) swap2.at(b * 4 + a, a * 4 + b) = F().one();
    StepFn fixture = [&](const DoubledState& psi) {
        DoubledState out = psi;
        out.sv = apply_window(swap2, {CellCoord{0}, CellCoord{3}}, 4, psi.sv);
        return out;
    };
    CausalityReport bad =
        check_causality_fn(fixture, Neighborhood::moore(1), 2, &F(), 50, 20240810);
    return !bad.pass();
}

// ---------------------------------------------------------------------- 7

bool criterion_gallery() {
    using namespace eqca::gallery;
    const std::vector<Oracle> oracles{Oracle::primality(), Oracle::parity(),
                                      Oracle::bitstring("11010011001011010001101011110010")};
    std::vector<std::uint64_t> indices;
    for (std::uint64_t i = 0; i <= 31; ++i) indices.push_back(i);
    for (const auto& oracle : oracles) {
        if (!demo_space_inhomogeneous(oracle, indices).matches_oracle) return false;
        if (!demo_time_inhomogeneous(oracle, 32).matches_oracle) return false;
        if (!demo_unbounded_density(oracle, 31).matches_oracle) return false;
        for (std::uint64_t i = 0; i <= 31; ++i) {
            if (!demo_unbounded_velocity(oracle, i, 0).matches_oracle) return false;
            if (!demo_unbounded_velocity(oracle, i, 1).matches_oracle) return false;
        }
        if (!demo_nonquiescent_input(oracle, 32).matches_oracle) return false;
    }

    auto extraction = demo_scalar_extraction(F().from_rational(Rat(3, 5)), 10000, 20240001);
    if (extraction.exact_p0 != Rat(9, 25)) return false;
    Rat err = extraction.estimate - extraction.exact_p0;
    if (err < 0) err = -err;
    if (err > Rat(2, 100)) return false;

    for (std::uint64_t i : {std::uint64_t(2), std::uint64_t(5)}) {
        auto corr1 = demo_stochastic_correlation(Oracle::all_ones(), i, 10000, 99);
        if (!corr1.matches_oracle || corr1.recovered.front().bit != 1) return false;
        auto corr0 = demo_stochastic_correlation(Oracle::all_zeros(), i, 10000, 99);
        if (!corr0.matches_oracle || corr0.recovered.front().bit != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------- 8

bool criterion_determinism() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "eqca_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    auto file = [&](const std::string& name) { return (dir / name).string(); };

    {
        std::vector<int> chi(27);
        for (std::size_t i = 0; i < 27; ++i) chi[i] = int(i % 3) + 1;
        ClassicalRule rule(3, Neighborhood::moore(1), chi);
        io::write_text_file(file("crule.json"),
                            io::canonical_dump(io::classical_rule_to_json(rule)));
        Config cfg;
        cfg.set(CellCoord{0}, 2);
        cfg.set(CellCoord{1}, 3);
        io::write_text_file(file("cfg.json"), io::canonical_dump(io::config_to_json(cfg)));
    }
    {
        QcaRule qrule = QcaRule::left_shift(&F(), 2);
        io::write_text_file(file("qrule.json"),
                            io::canonical_dump(io::qca_rule_to_json(qrule)));
        // (1/sqrt2)|e2 at 0> + (1/2)|e2 at 1> + (1/2)|vacuum>: exactly normalized
        StateVector v(&F());
        Config c1;
        c1.set(CellCoord{0}, 2);
        v.add_term(c1, F().from_coeffs({Rat(0), Rat(1, 2), Rat(0), Rat(-1, 2)}));
        Config c2;
        c2.set(CellCoord{1}, 2);
        v.add_term(c2, F().from_rational(Rat(1, 2)));
        v.add_term(Config{}, F().from_rational(Rat(1, 2)));
        io::write_text_file(file("state.json"),
                            io::canonical_dump(io::statevector_to_json(v)));
    }

    run::RunManifest classical;
    classical.mode = "classical";
    classical.rule_path = file("crule.json");
    classical.state_path = file("cfg.json");
    classical.steps = 5;
    if (run::run_classical(classical) != run::run_classical(classical)) return false;

    run::RunManifest quantum;
    quantum.mode = "quantum";
    quantum.rule_path = file("qrule.json");
    quantum.state_path = file("state.json");
    quantum.steps = 4;
    quantum.measure_at = CellCoord{-4};
    quantum.samples = 1000;
    quantum.seed = 7;
    if (run::run_quantum(quantum) != run::run_quantum(quantum)) return false;

    run::RunManifest verify;
    verify.mode = "verify";
    verify.rule_path = file("qrule.json");
    if (run::run_verify(verify) != run::run_verify(verify)) return false;

    run::GalleryParams gal;
    gal.demo = "stochastic-correlation";
    gal.oracle_kind = "primality";
    gal.index = 3;
    gal.samples = 5000;
    gal.seed = 12;
    if (run::run_gallery(gal) != run::run_gallery(gal)) return false;

    fs::remove_all(dir);
    return true;
}

}  // namespace

int main() {
    criterion(1, "encoding bijections", criterion_encodings);
    criterion(2, "field correctness", criterion_field);
    criterion(3, "classical dense-oracle equivalence", criterion_classical_oracle);
    criterion(4, "local-map dense-oracle equivalence", criterion_localop_oracle);
    criterion(5, "automaton engine properties and dense oracle", criterion_qca_engine);
    criterion(6, "causality property check", criterion_causality);
    criterion(7, "necessity gallery", criterion_gallery);
    criterion(8, "byte-identical determinism", criterion_determinism);
    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
