#pragma once

#include <functional>
#include <optional>

#include "eqca/fock.hpp"
#include "eqca/localop.hpp"
#include "eqca/rng.hpp"

namespace eqca {

// The quantum engine works on a doubled lattice: each cell carries a pair
// (primary, ancilla) of the base alphabet, packed into one combined symbol.
// The quiescent pair (q, q) packs to the quiescent combined symbol.
inline int pack_doubled(int primary, int ancilla, int n) {
    return (primary - 1) * n + (ancilla - 1) + 1;
}
inline std::pair<int, int> unpack_doubled(int combined, int n) {
    return {(combined - 1) / n + 1, (combined - 1) % n + 1};
}

/// A state over the doubled lattice. Between steps every ancilla component
/// is quiescent.
struct DoubledState {
    int n = 1;       // primary alphabet size
    StateVector sv;  // combined symbols in 1..n^2

    bool operator==(const DoubledState& o) const { return n == o.n && sv == o.sv; }
};

DoubledState embed_primary(const StateVector& v, int n);
StateVector project_primary(const DoubledState& psi);
bool ancillas_quiescent(const DoubledState& psi);

/// Exchanges the primary and ancilla components of one cell.
StateVector swap_cell(const StateVector& sv, const CellCoord& c, int n);

/// Exact load-time validation report for a candidate rule.
struct RuleCheck {
    bool unitary = false;
    bool quiescent = false;
    /// One entry per distinct window-overlap offset.
    std::vector<std::pair<CellCoord, bool>> commutation;

    bool commutation_ok() const {
        for (const auto& [off, ok] : commutation)
            if (!ok) return false;
        return true;
    }
    bool ok() const { return unitary && quiescent && commutation_ok(); }
};

/// Checks unitarity (K'K = I exactly), quiescence (K fixes the all-quiescent
/// window with no phase), and pairwise commutation of the induced blocks over
/// every distinct overlap geometry of the neighborhood.
RuleCheck verify_qca_rule(int n, const Neighborhood& nb, const ScalarMatrix& K);

/// A validated rule: neighborhood offsets and the local block K acting on the
/// window (C', sigma_1 C, ..., sigma_r C) — ancilla slot first, then the
/// primary neighborhood slots in order, mixed radix with the first slot most
/// significant. Construction runs verify_qca_rule and throws naming the
/// violated hypothesis on failure.
class QcaRule {
public:
    QcaRule(int n, Neighborhood nb, ScalarMatrix k_matrix);

    int n() const { return n_; }
    const Neighborhood& neighborhood() const { return nb_; }
    const ScalarMatrix& k_matrix() const { return k_; }
    const FieldSpec* spec() const { return k_.spec(); }

    /// K lifted to the doubled alphabet over the physical window cells
    /// (neighborhood order), stored as sparse columns.
    const std::vector<std::vector<std::pair<std::size_t, Scalar>>>& lifted_columns() const {
        return lifted_columns_;
    }
    std::size_t lifted_dim() const { return lifted_dim_; }

    /// K = Swap(C', C): the resulting global step is the identity.
    static QcaRule swap_rule(const FieldSpec* spec, int n, Neighborhood nb);

    /// K = (u on the ancilla slot) * Swap(C', C) for a single-cell unitary u
    /// fixing the quiescent state; the global step applies u at every cell.
    static QcaRule from_cell_unitary(const ScalarMatrix& u, Neighborhood nb);
    static ScalarMatrix k_from_cell_unitary(const ScalarMatrix& u, const Neighborhood& nb);

    /// K = Swap(C', C+1) over offsets {0, +1}: the global step shifts every
    /// primary state one cell to the left.
    static QcaRule left_shift(const FieldSpec* spec, int n);

private:
    int n_;
    Neighborhood nb_;
    ScalarMatrix k_;
    std::size_t lifted_dim_ = 0;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> lifted_columns_;
};

/// One global step: apply K at every cell of grow(support), then Swap at
/// every such cell. Commutation makes the K order irrelevant. The result has
/// quiescent ancillas and support inside grow(support); both are verified
/// and a violation (possible only for rules not arising from a causal
/// unitary) throws.
DoubledState qca_step(const DoubledState& psi, const QcaRule& rule);

/// qca_step with an explicit K application order (testing hook for the order
/// independence property).
DoubledState qca_step_ordered(const DoubledState& psi, const QcaRule& rule,
                              const std::vector<CellCoord>& order);

/// k-fold composition of qca_step.
DoubledState qca_evolve(const DoubledState& psi, const QcaRule& rule, const Nat& k);

struct CausalityReport {
    unsigned trials = 0;
    unsigned passes = 0;
    std::optional<unsigned> first_failure;

    bool pass() const { return passes == trials; }
};

using StepFn = std::function<DoubledState(const DoubledState&)>;

/// Randomized causality property check: builds pairs of states that agree in
/// reduced density on grow(A) (the second is the first conjugated by local
/// unitaries strictly outside grow(A)) and requires the stepped states to
/// agree in reduced density on A, exactly.
CausalityReport check_causality_fn(const StepFn& step, const Neighborhood& claimed, int n,
                                   const FieldSpec* spec, unsigned trials,
                                   std::uint64_t seed);
CausalityReport check_causality(const QcaRule& rule, unsigned trials, std::uint64_t seed);

/// Exact-probability seeded sampling of the primary component of one cell.
/// Probabilities come from the diagonal blocks of the one-cell reduced
/// density matrix, converted to rational intervals of width <= 2^-40.
/// Requires an exactly normalized state.
std::map<int, unsigned long> measure_cell(const DoubledState& psi, const CellCoord& c,
                                          std::uint64_t seed, unsigned long samples);

/// Lifts an n-dimensional unitary on the primary component to the doubled
/// alphabet (identity on the ancilla component).
ScalarMatrix lift_primary_unitary(const ScalarMatrix& u, int n);

/// A random exact unitary on dimension n: a product of permutations, powers
/// of the generator phase, and exact Givens rotations.
ScalarMatrix random_exact_unitary(const FieldSpec* spec, int n, DetRng& rng);

/// Same, but fixing the quiescent basis vector (needed for cell unitaries of
/// valid rules).
ScalarMatrix random_exact_unitary_fixing_q(const FieldSpec* spec, int n, DetRng& rng);

/// A random primary state with support inside the given cells.
StateVector random_primary_state(const FieldSpec* spec, int n,
                                 const std::vector<CellCoord>& cells, DetRng& rng);

}  // namespace eqca
