#include "eqca/localop.hpp"

namespace eqca {

namespace {

std::size_t window_dim(int n, std::size_t p) {
    std::size_t dim = 1;
    for (std::size_t i = 0; i < p; ++i) {
        if (dim > 4096 / std::size_t(n))
            throw std::invalid_argument("local map window too large (max dimension 4096)");
        dim *= std::size_t(n);
    }
    return dim;
}

}  // namespace

LocalMap::LocalMap(int basis_dim, std::vector<CellCoord> on_cells, ScalarMatrix m)
    : n(basis_dim), cells(std::move(on_cells)), matrix(std::move(m)) {
    if (n < 1) throw std::invalid_argument("basis dimension must be >= 1");
    if (cells.empty()) throw std::invalid_argument("local map needs at least one cell");
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j)
            if (cells[i] == cells[j])
                throw std::invalid_argument("local map cells must be distinct");
    const std::size_t dim = window_dim(n, cells.size());
    if (matrix.rows() != dim || matrix.cols() != dim)
        throw std::invalid_argument("local map matrix must be n^p x n^p");
}

LocalMap LocalMap::identity(const FieldSpec* spec, int n, std::vector<CellCoord> cells) {
    const std::size_t dim = window_dim(n, cells.size());
    return LocalMap(n, std::move(cells), ScalarMatrix::identity(spec, dim));
}

StateVector apply_window(const ScalarMatrix& matrix, const std::vector<CellCoord>& cells,
                         int n, const StateVector& u) {
    StateVector out(u.spec());
    const std::size_t p = cells.size();
    std::vector<int> digits(p);
    for (const auto& [cfg, coeff] : u.terms()) {
        std::size_t col = 0;
        for (std::size_t i = 0; i < p; ++i) {
            int s = cfg.get(cells[i]);
            if (s > n) throw std::invalid_argument("state symbol outside the map alphabet");
            col = col * std::size_t(n) + std::size_t(s - 1);
        }
        for (std::size_t row = 0; row < matrix.rows(); ++row) {
            const Scalar& weight = matrix.at(row, col);
            if (weight.is_zero()) continue;
            std::size_t rest = row;
            for (std::size_t i = p; i-- > 0;) {
                digits[i] = int(rest % std::size_t(n)) + 1;
                rest /= std::size_t(n);
            }
            Config written = cfg;
            for (std::size_t i = 0; i < p; ++i) written.set(cells[i], digits[i]);
            out.add_term(written, weight * coeff);
        }
    }
    return out;
}

StateVector apply(const LocalMap& op, const StateVector& u) {
    return apply_window(op.matrix, op.cells, op.n, u);
}

StateVector compose_check(const LocalMap& op1, const LocalMap& op2, const StateVector& u) {
    return apply(op1, apply(op2, u));
}

}  // namespace eqca
