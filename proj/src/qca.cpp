#include "eqca/qca.hpp"

#include <algorithm>

namespace eqca {

namespace {

using SparseColumns = std::vector<std::vector<std::pair<std::size_t, Scalar>>>;

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t limit,
                        const char* what) {
    std::size_t v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (v > limit / base) throw std::invalid_argument(what);
        v *= base;
    }
    return v;
}

SparseColumns sparse_columns(const ScalarMatrix& m) {
    SparseColumns cols(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (!m.at(r, c).is_zero()) cols[c].emplace_back(r, m.at(r, c));
    return cols;
}

// ---------------------------------------------------------------------------
// Slot-space commutation check. A K block touches the ancilla slot of its
// base cell plus the primary slots of its neighborhood; two blocks at offset
// delta share primary slots. The check applies both orders to every basis
// vector of the joint slot space and compares exactly.
// ---------------------------------------------------------------------------

struct SlotOp {
    // Positions (in the joint slot list) of the block's slots, ancilla first
    // then primaries in neighborhood order.
    std::vector<std::size_t> slots;
};

using SlotState = std::map<std::size_t, Scalar>;

SlotState apply_slot_op(const SlotOp& op, const SparseColumns& kcols, int n,
                        const std::vector<std::size_t>& strides, const SlotState& in) {
    SlotState out;
    for (const auto& [idx, coeff] : in) {
        std::size_t col = 0;
        for (std::size_t s : op.slots) col = col * std::size_t(n) + (idx / strides[s]) % std::size_t(n);
        for (const auto& [krow, w] : kcols[col]) {
            std::size_t nidx = idx;
            std::size_t rest = krow;
            for (std::size_t i = op.slots.size(); i-- > 0;) {
                std::size_t digit = rest % std::size_t(n);
                rest /= std::size_t(n);
                std::size_t s = op.slots[i];
                std::size_t old = (nidx / strides[s]) % std::size_t(n);
                nidx = nidx - old * strides[s] + digit * strides[s];
            }
            Scalar v = w * coeff;
            auto it = out.find(nidx);
            if (it == out.end()) {
                if (!v.is_zero()) out.emplace(nidx, std::move(v));
            } else {
                it->second += v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

bool blocks_commute(int n, const Neighborhood& nb, const SparseColumns& kcols,
                    const CellCoord& delta) {
    Region prim;
    for (const auto& s : nb.offsets()) {
        prim.insert(s);
        prim.insert(s + delta);
    }
    const std::vector<CellCoord> prim_cells(prim.begin(), prim.end());
    const std::size_t m = 2 + prim_cells.size();
    const std::size_t dim =
        checked_pow(std::size_t(n), m, std::size_t(1) << 22,
                    "neighborhood too large for exact commutation validation");
    std::vector<std::size_t> strides(m);
    for (std::size_t s = 0; s < m; ++s)
        strides[s] = checked_pow(std::size_t(n), m - 1 - s, std::size_t(1) << 22, "stride");

    auto prim_position = [&](const CellCoord& c) {
        auto it = std::lower_bound(prim_cells.begin(), prim_cells.end(), c);
        return 2 + std::size_t(it - prim_cells.begin());
    };
    SlotOp op0, op1;
    op0.slots.push_back(0);
    op1.slots.push_back(1);
    for (const auto& s : nb.offsets()) {
        op0.slots.push_back(prim_position(s));
        op1.slots.push_back(prim_position(s + delta));
    }

    const FieldSpec* spec = nullptr;
    for (const auto& col : kcols)
        if (!col.empty()) {
            spec = col.front().second.spec;
            break;
        }
    if (spec == nullptr) return true;  // all-zero matrix: rejected elsewhere

    for (std::size_t idx = 0; idx < dim; ++idx) {
        SlotState e;
        e.emplace(idx, spec->one());
        SlotState w1 = apply_slot_op(op0, kcols, n, strides, apply_slot_op(op1, kcols, n, strides, e));
        SlotState w2 = apply_slot_op(op1, kcols, n, strides, apply_slot_op(op0, kcols, n, strides, e));
        if (w1 != w2) return false;
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Doubled-state helpers
// ---------------------------------------------------------------------------

DoubledState embed_primary(const StateVector& v, int n) {
    if (n < 1) throw std::invalid_argument("alphabet size must be >= 1");
    DoubledState out{n, StateVector(v.spec())};
    for (const auto& [cfg, a] : v.terms()) {
        Config packed;
        for (const auto& [cell, s] : cfg.cells()) {
            if (s > n) throw std::invalid_argument("state symbol outside the alphabet");
            packed.set(cell, pack_doubled(s, kQuiescent, n));
        }
        out.sv.add_term(packed, a);
    }
    return out;
}

StateVector project_primary(const DoubledState& psi) {
    StateVector out(psi.sv.spec());
    for (const auto& [cfg, a] : psi.sv.terms()) {
        Config plain;
        for (const auto& [cell, s] : cfg.cells()) {
            auto [p, anc] = unpack_doubled(s, psi.n);
            if (anc != kQuiescent)
                throw std::domain_error("project_primary: ancilla not quiescent");
            plain.set(cell, p);
        }
        out.add_term(plain, a);
    }
    return out;
}

bool ancillas_quiescent(const DoubledState& psi) {
    for (const auto& [cfg, a] : psi.sv.terms())
        for (const auto& [cell, s] : cfg.cells())
            if (unpack_doubled(s, psi.n).second != kQuiescent) return false;
    return true;
}

StateVector swap_cell(const StateVector& sv, const CellCoord& c, int n) {
    StateVector out(sv.spec());
    for (const auto& [cfg, a] : sv.terms()) {
        Config swapped = cfg;
        auto [p, anc] = unpack_doubled(cfg.get(c), n);
        swapped.set(c, pack_doubled(anc, p, n));
        out.add_term(swapped, a);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rule validation
// ---------------------------------------------------------------------------

RuleCheck verify_qca_rule(int n, const Neighborhood& nb, const ScalarMatrix& K) {
    if (n < 1) throw std::invalid_argument("alphabet size must be >= 1");
    const std::size_t r = nb.r();
    const std::size_t dim =
        checked_pow(std::size_t(n), r + 1, 4096, "rule window too large (n^(r+1) > 4096)");
    if (K.rows() != dim || K.cols() != dim)
        throw std::invalid_argument("K must be square of dimension n^(r+1)");

    RuleCheck rc;
    rc.unitary = K.is_unitary();
    rc.quiescent = true;
    for (std::size_t i = 0; i < dim; ++i) {
        const Scalar& v = K.at(i, 0);
        const bool want_one = (i == 0);
        if (want_one ? v != K.spec()->one() : !v.is_zero()) {
            rc.quiescent = false;
            break;
        }
    }

    // Distinct overlap geometries: nonzero offset differences, up to sign.
    Region deltas;
    for (const auto& a : nb.offsets())
        for (const auto& b : nb.offsets()) {
            CellCoord d = a - b;
            if (!d.is_zero()) deltas.insert(std::max(d, -d));
        }
    const SparseColumns kcols = sparse_columns(K);
    for (const auto& d : deltas)
        rc.commutation.emplace_back(d, blocks_commute(n, nb, kcols, d));
    return rc;
}

// ---------------------------------------------------------------------------
// QcaRule
// ---------------------------------------------------------------------------

QcaRule::QcaRule(int n, Neighborhood nb, ScalarMatrix k_matrix)
    : n_(n), nb_(std::move(nb)), k_(std::move(k_matrix)) {
    RuleCheck rc = verify_qca_rule(n_, nb_, k_);
    if (!rc.unitary)
        throw std::invalid_argument("unitarity: K is not unitary (K'K != I exactly)");
    if (!rc.quiescent)
        throw std::invalid_argument(
            "quiescence: K does not fix the all-quiescent window exactly "
            "(a pure phase on the quiescent window is rejected; renormalize it)");
    for (const auto& [off, ok] : rc.commutation)
        if (!ok)
            throw std::invalid_argument(
                "bounded velocity (localizability): K blocks on overlapping windows "
                "do not commute");

    // Lift K to the doubled alphabet over the physical window cells.
    const std::size_t r = nb_.r();
    const std::size_t z = nb_.zero_index();
    const std::size_t nn = std::size_t(n_);
    lifted_dim_ = checked_pow(nn * nn, r, 4096,
                              "rule window too large for the doubled lattice (max 4096)");
    const SparseColumns kcols = sparse_columns(k_);
    lifted_columns_.assign(lifted_dim_, {});
    std::vector<std::size_t> prim(r), anc(r);
    for (std::size_t col = 0; col < lifted_dim_; ++col) {
        std::size_t rest = col;
        for (std::size_t i = r; i-- > 0;) {
            std::size_t digit = rest % (nn * nn);
            rest /= nn * nn;
            prim[i] = digit / nn;
            anc[i] = digit % nn;
        }
        std::size_t kcol = anc[z];
        for (std::size_t i = 0; i < r; ++i) kcol = kcol * nn + prim[i];
        for (const auto& [krow, w] : kcols[kcol]) {
            std::size_t krest = krow;
            std::size_t row = 0;
            std::vector<std::size_t> out_prim(r);
            for (std::size_t i = r; i-- > 0;) {
                out_prim[i] = krest % nn;
                krest /= nn;
            }
            const std::size_t out_anc_z = krest;  // top digit: the ancilla slot
            for (std::size_t i = 0; i < r; ++i) {
                std::size_t a = (i == z) ? out_anc_z : anc[i];
                row = row * (nn * nn) + out_prim[i] * nn + a;
            }
            lifted_columns_[col].emplace_back(row, w);
        }
    }
}

ScalarMatrix QcaRule::k_from_cell_unitary(const ScalarMatrix& u, const Neighborhood& nb) {
    const std::size_t n = u.rows();
    if (u.cols() != n || n < 1) throw std::invalid_argument("cell unitary must be square");
    const std::size_t r = nb.r();
    const std::size_t z = nb.zero_index();
    const std::size_t dim = checked_pow(n, r + 1, 4096, "rule window too large");
    ScalarMatrix K(u.spec(), dim, dim);
    std::vector<std::size_t> digits(r + 1);
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t rest = col;
        for (std::size_t i = r + 1; i-- > 0;) {
            digits[i] = rest % n;
            rest /= n;
        }
        const std::size_t a = digits[0];
        const std::size_t pz = digits[1 + z];
        for (std::size_t b = 0; b < n; ++b) {
            const Scalar& w = u.at(b, pz);
            if (w.is_zero()) continue;
            std::size_t row = b;
            for (std::size_t i = 0; i < r; ++i) row = row * n + (i == z ? a : digits[1 + i]);
            K.at(row, col) = w;
        }
    }
    return K;
}

QcaRule QcaRule::from_cell_unitary(const ScalarMatrix& u, Neighborhood nb) {
    ScalarMatrix K = k_from_cell_unitary(u, nb);
    return QcaRule(int(u.rows()), std::move(nb), std::move(K));
}

QcaRule QcaRule::swap_rule(const FieldSpec* spec, int n, Neighborhood nb) {
    return from_cell_unitary(ScalarMatrix::identity(spec, std::size_t(n)), std::move(nb));
}

QcaRule QcaRule::left_shift(const FieldSpec* spec, int n) {
    Neighborhood nb({CellCoord{0}, CellCoord{1}});
    const std::size_t nn = std::size_t(n);
    const std::size_t dim = nn * nn * nn;
    ScalarMatrix K(spec, dim, dim);
    for (std::size_t a = 0; a < nn; ++a)
        for (std::size_t p0 = 0; p0 < nn; ++p0)
            for (std::size_t p1 = 0; p1 < nn; ++p1) {
                const std::size_t col = (a * nn + p0) * nn + p1;
                const std::size_t row = (p1 * nn + p0) * nn + a;
                K.at(row, col) = spec->one();
            }
    return QcaRule(n, std::move(nb), std::move(K));
}

// ---------------------------------------------------------------------------
// Stepping
// ---------------------------------------------------------------------------

namespace {

StateVector apply_lifted(const QcaRule& rule, const std::vector<CellCoord>& cells,
                         const StateVector& sv) {
    const std::size_t nn = std::size_t(rule.n());
    const std::size_t cell_dim = nn * nn;
    StateVector out(sv.spec());
    std::vector<std::size_t> digits(cells.size());
    for (const auto& [cfg, coeff] : sv.terms()) {
        std::size_t col = 0;
        for (const auto& c : cells) {
            int s = cfg.get(c);
            if (std::size_t(s) > cell_dim)
                throw std::invalid_argument("state symbol outside the doubled alphabet");
            col = col * cell_dim + std::size_t(s - 1);
        }
        for (const auto& [row, w] : rule.lifted_columns()[col]) {
            std::size_t rest = row;
            for (std::size_t i = cells.size(); i-- > 0;) {
                digits[i] = rest % cell_dim;
                rest /= cell_dim;
            }
            Config written = cfg;
            for (std::size_t i = 0; i < cells.size(); ++i)
                written.set(cells[i], int(digits[i]) + 1);
            out.add_term(written, w * coeff);
        }
    }
    return out;
}

DoubledState step_impl(const DoubledState& psi, const QcaRule& rule,
                       const std::vector<CellCoord>* explicit_order) {
    if (psi.n != rule.n())
        throw std::invalid_argument("state and rule alphabet sizes differ");
    if (!ancillas_quiescent(psi))
        throw std::domain_error("qca_step: ancilla not quiescent in the input state");
    if (psi.sv.is_zero()) return psi;

    const Region support = psi.sv.support();
    if (support.empty()) return psi;  // all-quiescent state is fixed
    const Region active = grow(support, rule.neighborhood());

    std::vector<CellCoord> order;
    if (explicit_order != nullptr) {
        order = *explicit_order;
        if (Region(order.begin(), order.end()) != active || order.size() != active.size())
            throw std::invalid_argument("qca_step: order must enumerate grow(support)");
    } else {
        order.assign(active.begin(), active.end());
    }

    StateVector cur = psi.sv;
    for (const auto& c : order)
        cur = apply_lifted(rule, neighborhood_of(c, rule.neighborhood()), cur);
    for (const auto& c : active) cur = swap_cell(cur, c, rule.n());

    DoubledState out{rule.n(), std::move(cur)};
    if (!ancillas_quiescent(out))
        throw std::domain_error(
            "bounded velocity (localizability): the rule left an ancilla non-quiescent, "
            "so it does not arise from a causal unitary");
    for (const auto& c : out.sv.support())
        if (!active.contains(c))
            throw std::domain_error(
                "bounded velocity: step support escaped the neighborhood growth "
                "of the input support");
    return out;
}

}  // namespace

DoubledState qca_step(const DoubledState& psi, const QcaRule& rule) {
    return step_impl(psi, rule, nullptr);
}

DoubledState qca_step_ordered(const DoubledState& psi, const QcaRule& rule,
                              const std::vector<CellCoord>& order) {
    return step_impl(psi, rule, &order);
}

DoubledState qca_evolve(const DoubledState& psi, const QcaRule& rule, const Nat& k) {
    require_nat(k, "qca_evolve");
    DoubledState cur = psi;
    for (Nat i = 0; i < k; ++i) cur = qca_step(cur, rule);
    return cur;
}

// ---------------------------------------------------------------------------
// Randomized helpers (exact unitaries and states)
// ---------------------------------------------------------------------------

namespace {

std::vector<Scalar> phase_pool(const FieldSpec* spec) {
    std::vector<Scalar> pool{spec->one(), -spec->one()};
    Scalar g = spec->generator();
    if (abs_sq(g) == spec->one())
        for (unsigned long k = 1; k < 8; ++k) pool.push_back(pow(g, k));
    return pool;
}

struct Pythagorean {
    long num_a, num_b, den;
};
constexpr Pythagorean kTriples[] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}};

ScalarMatrix random_unitary_impl(const FieldSpec* spec, int n, DetRng& rng, int min_index) {
    const std::size_t nn = std::size_t(n);
    ScalarMatrix u = ScalarMatrix::identity(spec, nn);
    const auto phases = phase_pool(spec);
    const int span = n - min_index;
    if (span <= 0) return u;
    const unsigned rounds = 2 + unsigned(rng.below(3));
    for (unsigned round = 0; round < rounds; ++round) {
        const auto kind = rng.below(span >= 2 ? 3 : 1);
        if (kind == 0) {  // phase on one basis vector
            const std::size_t i = std::size_t(min_index) + rng.below(std::uint64_t(span));
            const Scalar& ph = phases[rng.below(phases.size())];
            ScalarMatrix g = ScalarMatrix::identity(spec, nn);
            g.at(i, i) = ph;
            u = g * u;
        } else if (kind == 1) {  // basis swap
            std::size_t i = std::size_t(min_index) + rng.below(std::uint64_t(span));
            std::size_t j = std::size_t(min_index) + rng.below(std::uint64_t(span));
            if (i == j) continue;
            ScalarMatrix g = ScalarMatrix::identity(spec, nn);
            g.at(i, i) = spec->zero();
            g.at(j, j) = spec->zero();
            g.at(i, j) = spec->one();
            g.at(j, i) = spec->one();
            u = g * u;
        } else {  // exact rational rotation
            std::size_t i = std::size_t(min_index) + rng.below(std::uint64_t(span));
            std::size_t j = std::size_t(min_index) + rng.below(std::uint64_t(span));
            if (i == j) continue;
            const auto& t = kTriples[rng.below(3)];
            ScalarMatrix g = ScalarMatrix::identity(spec, nn);
            g.at(i, i) = spec->from_rational(Rat(t.num_a, t.den));
            g.at(i, j) = spec->from_rational(Rat(t.num_b, t.den));
            g.at(j, i) = spec->from_rational(Rat(-t.num_b, t.den));
            g.at(j, j) = spec->from_rational(Rat(t.num_a, t.den));
            u = g * u;
        }
    }
    return u;
}

}  // namespace

ScalarMatrix random_exact_unitary(const FieldSpec* spec, int n, DetRng& rng) {
    return random_unitary_impl(spec, n, rng, 0);
}

ScalarMatrix random_exact_unitary_fixing_q(const FieldSpec* spec, int n, DetRng& rng) {
    return random_unitary_impl(spec, n, rng, 1);
}

StateVector random_primary_state(const FieldSpec* spec, int n,
                                 const std::vector<CellCoord>& cells, DetRng& rng) {
    StateVector v(spec);
    const auto phases = phase_pool(spec);
    const unsigned terms = 1 + unsigned(rng.below(3));
    for (unsigned t = 0; t < terms; ++t) {
        Config cfg;
        for (const auto& c : cells) {
            int s = 1 + int(rng.below(std::uint64_t(n)));
            if (s > 1) cfg.set(c, s);
        }
        Rat mag = make_rat(Int(rng.range(1, 3) * (rng.coin() ? 1 : -1)), Int(rng.range(1, 2)));
        Scalar coeff = spec->from_rational(mag) * phases[rng.below(phases.size())];
        v.add_term(cfg, coeff);
    }
    if (v.is_zero()) v.add_term(Config{}, spec->one());
    return v;
}

// ---------------------------------------------------------------------------
// Causality property check
// ---------------------------------------------------------------------------

namespace {

CellCoord random_cell(DetRng& rng, std::size_t d, long lo, long hi) {
    std::vector<Int> comps;
    comps.reserve(d);
    for (std::size_t i = 0; i < d; ++i) comps.emplace_back(rng.range(lo, hi));
    return CellCoord(std::move(comps));
}

void enumerate_box(std::size_t d, long lo, long hi, std::vector<Int>& prefix,
                   std::vector<CellCoord>& out) {
    if (prefix.size() == d) {
        out.push_back(CellCoord(prefix));
        return;
    }
    for (long v = lo; v <= hi; ++v) {
        prefix.emplace_back(v);
        enumerate_box(d, lo, hi, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

ScalarMatrix lift_primary_unitary(const ScalarMatrix& u, int n) {
    const std::size_t nn = std::size_t(n);
    ScalarMatrix out(u.spec(), nn * nn, nn * nn);
    for (std::size_t pr = 0; pr < nn; ++pr)
        for (std::size_t pc = 0; pc < nn; ++pc) {
            if (u.at(pr, pc).is_zero()) continue;
            for (std::size_t a = 0; a < nn; ++a)
                out.at(pr * nn + a, pc * nn + a) = u.at(pr, pc);
        }
    return out;
}

CausalityReport check_causality_fn(const StepFn& step, const Neighborhood& claimed, int n,
                                   const FieldSpec* spec, unsigned trials,
                                   std::uint64_t seed) {
    DetRng rng(seed);
    const std::size_t d = claimed.dim();
    checked_pow(9, d, std::size_t(1) << 20, "causality check dimension too large");

    std::vector<CellCoord> box;
    {
        std::vector<Int> prefix;
        enumerate_box(d, -4, 4, prefix, box);
    }

    CausalityReport report;
    report.trials = trials;
    for (unsigned t = 0; t < trials; ++t) {
        Region a_region;
        const std::size_t a_size = (n <= 2) ? 1 + rng.below(2) : 1;
        while (a_region.size() < a_size) a_region.insert(random_cell(rng, d, -2, 2));
        // The region one step of the dynamics can read from: the union of the
        // neighborhoods of A. (For symmetric offsets this equals grow(A).)
        Region grown;
        for (const auto& a : a_region)
            for (const auto& c : neighborhood_of(a, claimed)) grown.insert(c);

        std::vector<CellCoord> support_pool;
        while (support_pool.size() < 3) {
            CellCoord c = random_cell(rng, d, -3, 3);
            if (std::find(support_pool.begin(), support_pool.end(), c) == support_pool.end())
                support_pool.push_back(c);
        }
        DoubledState psi1 = embed_primary(random_primary_state(spec, n, support_pool, rng), n);

        DoubledState psi2 = psi1;
        std::vector<CellCoord> eligible;
        for (const auto& c : box)
            if (!grown.contains(c)) eligible.push_back(c);
        for (int k = 0; k < 2 && !eligible.empty(); ++k) {
            const CellCoord& c = eligible[rng.below(eligible.size())];
            ScalarMatrix u = lift_primary_unitary(random_exact_unitary(spec, n, rng), n);
            psi2.sv = apply_window(u, {c}, n * n, psi2.sv);
        }

        const DensityMatrix r1 = reduced_density(step(psi1).sv, a_region, n * n);
        const DensityMatrix r2 = reduced_density(step(psi2).sv, a_region, n * n);
        if (r1 == r2) {
            ++report.passes;
        } else if (!report.first_failure) {
            report.first_failure = t;
        }
    }
    return report;
}

CausalityReport check_causality(const QcaRule& rule, unsigned trials, std::uint64_t seed) {
    return check_causality_fn([&rule](const DoubledState& psi) { return qca_step(psi, rule); },
                              rule.neighborhood(), rule.n(), rule.spec(), trials, seed);
}

// ---------------------------------------------------------------------------
// Measurement
// ---------------------------------------------------------------------------

std::map<int, unsigned long> measure_cell(const DoubledState& psi, const CellCoord& c,
                                          std::uint64_t seed, unsigned long samples) {
    if (psi.sv.spec() == nullptr) throw std::invalid_argument("state without field");
    if (inner(psi.sv, psi.sv) != psi.sv.spec()->one())
        throw std::domain_error("measure_cell: state is not exactly normalized");
    const int n = psi.n;
    const DensityMatrix dm = reduced_density(psi.sv, Region{c}, n * n);

    // Primary-outcome probabilities: trace each primary block over ancillas.
    const Rat eps(Int(1), Int(1) << 40);
    std::vector<Rat> cumulative_mid;
    Rat acc(0);
    for (int e = 1; e <= n; ++e) {
        Scalar p = psi.sv.spec()->zero();
        for (int a = 1; a <= n; ++a) {
            const std::size_t idx = std::size_t(pack_doubled(e, a, n)) - 1;
            p += dm.entries.at(idx, idx);
        }
        RatInterval enclosure = approx_real(p, eps);
        acc += enclosure.mid();
        cumulative_mid.push_back(acc);
    }

    std::map<int, unsigned long> histogram;
    for (int e = 1; e <= n; ++e) histogram[e] = 0;
    DetRng rng(seed);
    for (unsigned long s = 0; s < samples; ++s) {
        const Rat u = rng.unit_rational();
        int outcome = n;
        for (int e = 1; e <= n; ++e)
            if (u < cumulative_mid[std::size_t(e - 1)]) {
                outcome = e;
                break;
            }
        ++histogram[outcome];
    }
    return histogram;
}

}  // namespace eqca
