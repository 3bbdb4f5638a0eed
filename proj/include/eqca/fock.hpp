#pragma once

#include <map>

#include "eqca/classical.hpp"
#include "eqca/config.hpp"
#include "eqca/field.hpp"
#include "eqca/matrix.hpp"

namespace eqca {

/// A finite exact linear combination of basis configurations. Zero
/// coefficients are never stored, so equality is term-wise.
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(const FieldSpec* spec) : spec_(spec) {}

    static StateVector basis(const FieldSpec* spec, const Config& c);

    const FieldSpec* spec() const { return spec_; }
    const std::map<Config, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Scalar coeff(const Config& c) const;

    /// Accumulates a term and drops it if the sum cancels.
    void add_term(const Config& c, const Scalar& coefficient);

    StateVector operator+(const StateVector& o) const;
    StateVector operator-(const StateVector& o) const;
    bool operator==(const StateVector& o) const;
    bool operator!=(const StateVector& o) const { return !(*this == o); }

    StateVector translated(const CellCoord& t) const;

    /// Union of the non-quiescent cells over all terms.
    Region support() const;
    int max_symbol() const;

private:
    const FieldSpec* spec_ = nullptr;
    std::map<Config, Scalar> terms_;
};

StateVector scale(const Scalar& a, const StateVector& v);

/// Writes basis vector e at cell c in every term (the cell-addressed form of
/// the prepend operation). Requires the cell to be quiescent in every term.
StateVector set_cell(const CellCoord& c, int e, const StateVector& v);

/// Hermitian inner product; configurations form an orthonormal basis.
Scalar inner(const StateVector& u, const StateVector& v);

/// Index of a scalar: the sequence index over the folded numerators and
/// denominators of its coefficient vector.
Nat scalar_index(const Scalar& a);
Scalar scalar_unindex(const Nat& k, const FieldSpec* spec);

/// Index of a vector: terms sorted by configuration index, flattened into an
/// alternating sequence of scalar and configuration indices, then
/// seq_encoded. The zero vector has index 0.
Nat vector_index(const StateVector& v);
StateVector vector_unindex(const Nat& k, const FieldSpec* spec, std::size_t d);
double vector_index_bits_estimate(const StateVector& v);

/// Exact reduced density matrix of a finite region: the partial trace of
/// |v><v| over the complement. Rows/columns are indexed by region patterns
/// in mixed radix over the region's sorted cell order, first cell most
/// significant, digits symbol-1.
struct DensityMatrix {
    std::vector<CellCoord> region;
    ScalarMatrix entries;

    bool operator==(const DensityMatrix& o) const {
        return region == o.region && entries == o.entries;
    }
};

DensityMatrix reduced_density(const StateVector& v, const Region& reg, int n);

Scalar trace(const DensityMatrix& d);

}  // namespace eqca
