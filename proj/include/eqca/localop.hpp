#pragma once

#include "eqca/fock.hpp"
#include "eqca/matrix.hpp"

namespace eqca {

/// A linear map acting on a fixed ordered list of p distinct cells and as the
/// identity everywhere else. Rows and columns are indexed by the mixed-radix
/// number over the ordered cell patterns, first cell most significant,
/// digits symbol-1.
struct LocalMap {
    int n = 1;                     // per-cell basis dimension
    std::vector<CellCoord> cells;  // p distinct cells
    ScalarMatrix matrix;           // n^p x n^p

    LocalMap(int basis_dim, std::vector<CellCoord> on_cells, ScalarMatrix m);

    static LocalMap identity(const FieldSpec* spec, int n, std::vector<CellCoord> cells);
};

/// Core application routine shared by LocalMap and the automaton engine:
/// applies `matrix` on the ordered `cells` window of every term of u.
/// Exterior cells are never touched; zero terms are dropped.
StateVector apply_window(const ScalarMatrix& matrix, const std::vector<CellCoord>& cells,
                         int n, const StateVector& u);

/// Coordinate-formula application of a local linear map.
StateVector apply(const LocalMap& op, const StateVector& u);

/// apply(op1, apply(op2, u)); convenience for commutator checks.
StateVector compose_check(const LocalMap& op1, const LocalMap& op2, const StateVector& u);

}  // namespace eqca
