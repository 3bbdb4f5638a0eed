#pragma once

#include <compare>
#include <stdexcept>
#include <vector>

#include "eqca/numbers.hpp"

namespace eqca {

/// A lattice cell (or translation vector) in Z^d. Components are
/// arbitrary-precision signed integers.
struct CellCoord {
    std::vector<Int> c;

    CellCoord() = default;
    explicit CellCoord(std::vector<Int> components) : c(std::move(components)) {
        if (c.empty()) throw std::invalid_argument("cell coordinate needs dimension >= 1");
    }
    CellCoord(std::initializer_list<long> xs) {
        for (long x : xs) c.emplace_back(x);
        if (c.empty()) throw std::invalid_argument("cell coordinate needs dimension >= 1");
    }

    std::size_t dim() const { return c.size(); }

    bool operator==(const CellCoord& o) const { return c == o.c; }
    bool operator!=(const CellCoord& o) const { return c != o.c; }
    bool operator<(const CellCoord& o) const {
        if (c.size() != o.c.size()) return c.size() < o.c.size();
        for (std::size_t i = 0; i < c.size(); ++i) {
            int s = cmp(c[i], o.c[i]);
            if (s != 0) return s < 0;
        }
        return false;
    }

    CellCoord operator+(const CellCoord& t) const {
        check_dim(t);
        CellCoord r = *this;
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += t.c[i];
        return r;
    }
    CellCoord operator-(const CellCoord& t) const {
        check_dim(t);
        CellCoord r = *this;
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= t.c[i];
        return r;
    }
    CellCoord operator-() const {
        CellCoord r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }

    static CellCoord zero(std::size_t d) {
        return CellCoord(std::vector<Int>(d, Int(0)));
    }

    bool is_zero() const {
        for (const auto& x : c)
            if (x != 0) return false;
        return true;
    }

private:
    void check_dim(const CellCoord& o) const {
        if (c.size() != o.c.size())
            throw std::invalid_argument("cell coordinate dimension mismatch");
    }
};

}  // namespace eqca
