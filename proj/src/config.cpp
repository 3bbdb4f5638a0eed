#include "eqca/config.hpp"

#include <stdexcept>

namespace eqca {

void Config::set(const CellCoord& c, int symbol) {
    if (symbol < 1) throw std::invalid_argument("symbol indices start at 1");
    if (!cells_.empty() && c.dim() != cells_.begin()->first.dim())
        throw std::invalid_argument("configuration cells have mixed dimensions");
    if (symbol == kQuiescent) {
        cells_.erase(c);
    } else {
        cells_[c] = symbol;
    }
}

Region Config::support() const {
    Region out;
    for (const auto& [c, s] : cells_) out.insert(c);
    return out;
}

Config Config::translated(const CellCoord& t) const {
    Config out;
    for (const auto& [c, s] : cells_) out.cells_[c + t] = s;
    return out;
}

int Config::max_symbol() const {
    int m = kQuiescent;
    for (const auto& [c, s] : cells_) m = std::max(m, s);
    return m;
}

}  // namespace eqca
