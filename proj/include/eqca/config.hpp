#pragma once

#include <map>

#include "eqca/cell.hpp"
#include "eqca/lattice.hpp"

namespace eqca {

inline constexpr int kQuiescent = 1;

/// Finite-support assignment of basis-state indices to lattice cells.
/// Only non-quiescent cells (symbol >= 2) are stored, so the representation
/// is canonical and equality is map equality.
class Config {
public:
    Config() = default;

    int get(const CellCoord& c) const {
        auto it = cells_.find(c);
        return it == cells_.end() ? kQuiescent : it->second;
    }

    /// Writes a symbol; writing the quiescent symbol erases the cell.
    void set(const CellCoord& c, int symbol);

    bool empty() const { return cells_.empty(); }
    std::size_t support_size() const { return cells_.size(); }
    const std::map<CellCoord, int>& cells() const { return cells_; }

    Region support() const;
    Config translated(const CellCoord& t) const;
    int max_symbol() const;

    /// Dimension of the stored coordinates; 0 when the support is empty.
    std::size_t dim() const { return cells_.empty() ? 0 : cells_.begin()->first.dim(); }

    bool operator==(const Config& o) const { return cells_ == o.cells_; }
    bool operator!=(const Config& o) const { return cells_ != o.cells_; }
    bool operator<(const Config& o) const { return cells_ < o.cells_; }

private:
    std::map<CellCoord, int> cells_;
};

}  // namespace eqca
