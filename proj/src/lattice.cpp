#include "eqca/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqca {

Neighborhood::Neighborhood(std::vector<CellCoord> offsets) : offsets_(std::move(offsets)) {
    if (offsets_.empty()) throw std::invalid_argument("neighborhood needs at least one offset");
    const std::size_t d = offsets_.front().dim();
    bool has_zero = false;
    for (std::size_t i = 0; i < offsets_.size(); ++i) {
        if (offsets_[i].dim() != d)
            throw std::invalid_argument("neighborhood offsets have mixed dimensions");
        for (std::size_t j = i + 1; j < offsets_.size(); ++j)
            if (offsets_[i] == offsets_[j])
                throw std::invalid_argument("neighborhood offsets must be distinct");
        if (offsets_[i].is_zero()) {
            has_zero = true;
            zero_index_ = i;
        }
    }
    if (!has_zero)
        throw std::invalid_argument("neighborhood must contain the zero offset");
}

Neighborhood Neighborhood::moore(std::size_t d) {
    if (d == 0) throw std::invalid_argument("dimension must be >= 1");
    std::vector<CellCoord> offsets;
    std::vector<long> digits(d, -1);
    while (true) {
        std::vector<Int> comp(digits.begin(), digits.end());
        offsets.emplace_back(std::move(comp));
        bool done = true;
        std::size_t i = d;
        while (i-- > 0) {
            if (digits[i] < 1) {
                ++digits[i];
                done = false;
                break;
            }
            digits[i] = -1;
        }
        if (done) break;
    }
    return Neighborhood(std::move(offsets));
}

std::vector<CellCoord> neighborhood_of(const CellCoord& c, const Neighborhood& nb) {
    std::vector<CellCoord> out;
    out.reserve(nb.r());
    for (const auto& s : nb.offsets()) out.push_back(c + s);
    return out;
}

Region grow(const Region& reg, const Neighborhood& nb) {
    Region out;
    for (const auto& c : reg)
        for (const auto& s : nb.offsets()) out.insert(c - s);
    return out;
}

Region translate_region(const Region& reg, const CellCoord& t) {
    Region out;
    for (const auto& c : reg) out.insert(c + t);
    return out;
}

}  // namespace eqca
