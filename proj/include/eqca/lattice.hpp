#pragma once

#include <set>
#include <vector>

#include "eqca/cell.hpp"

namespace eqca {

/// An ordered list of r distinct offsets defining which cells a cell reads
/// from; must contain the zero offset. The order is significant: it fixes
/// the tensor-factor order of rule windows.
class Neighborhood {
public:
    explicit Neighborhood(std::vector<CellCoord> offsets);

    /// The 3^d Moore neighborhood of radius 1 in lexicographic offset order.
    static Neighborhood moore(std::size_t d);

    const std::vector<CellCoord>& offsets() const { return offsets_; }
    std::size_t r() const { return offsets_.size(); }
    std::size_t dim() const { return offsets_.front().dim(); }
    std::size_t zero_index() const { return zero_index_; }

    bool operator==(const Neighborhood& o) const { return offsets_ == o.offsets_; }

private:
    std::vector<CellCoord> offsets_;
    std::size_t zero_index_ = 0;
};

using Region = std::set<CellCoord>;

inline CellCoord translate(const CellCoord& c, const CellCoord& t) { return c + t; }

/// [c + sigma_1, ..., c + sigma_r] in the neighborhood's fixed order.
std::vector<CellCoord> neighborhood_of(const CellCoord& c, const Neighborhood& nb);

/// The set of cells whose neighborhood intersects reg: union of
/// { c - sigma : c in reg, sigma in offsets }. Contains reg because the zero
/// offset is always present.
Region grow(const Region& reg, const Neighborhood& nb);

Region translate_region(const Region& reg, const CellCoord& t);

}  // namespace eqca
