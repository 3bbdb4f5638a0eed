#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "eqca/numbers.hpp"

namespace eqca {

/// Closed interval with exact rational endpoints.
struct RatInterval {
    Rat lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("interval with lo > hi");
    }
    static RatInterval point(const Rat& x) { return RatInterval(x, x); }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    bool subset_of(const RatInterval& o) const { return o.lo <= lo && hi <= o.hi; }
    bool strictly_inside(const RatInterval& o) const { return o.lo < lo && hi < o.hi; }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RatInterval operator-() const { return {-hi, -lo}; }
    RatInterval operator*(const RatInterval& o) const {
        Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)),
                std::max(std::max(a, b), std::max(c, d))};
    }

    /// Intersection; empty intersection is a logic error here (the callers
    /// intersect enclosures of the same point).
    RatInterval intersect(const RatInterval& o) const {
        Rat l = std::max(lo, o.lo), h = std::min(hi, o.hi);
        if (l > h) throw std::logic_error("empty interval intersection");
        return {l, h};
    }

    RatInterval hull(const RatInterval& o) const {
        return {std::min(lo, o.lo), std::max(hi, o.hi)};
    }

    /// Outward rounding onto the dyadic grid 2^-bits; keeps endpoint sizes
    /// bounded during iterated refinement.
    RatInterval outward(unsigned bits) const;
};

/// Exact complex rational point.
struct CRat {
    Rat re, im;

    CRat() : re(0), im(0) {}
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    CRat operator+(const CRat& o) const { return {re + o.re, im + o.im}; }
    CRat operator-(const CRat& o) const { return {re - o.re, im - o.im}; }
    CRat operator*(const CRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CRat conj() const { return {re, -im}; }
    CRat inverse() const {
        Rat n = re * re + im * im;
        if (n == 0) throw std::domain_error("complex inverse of zero");
        return {re / n, -im / n};
    }
};

/// Axis-aligned complex rectangle with exact rational corners.
struct Box {
    RatInterval re, im;

    Box() = default;
    Box(RatInterval r, RatInterval i) : re(std::move(r)), im(std::move(i)) {}
    static Box point(const CRat& z) {
        return {RatInterval::point(z.re), RatInterval::point(z.im)};
    }

    CRat mid() const { return {re.mid(), im.mid()}; }
    Rat max_width() const { return std::max(re.width(), im.width()); }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    bool contains(const CRat& z) const { return re.contains(z.re) && im.contains(z.im); }
    bool subset_of(const Box& o) const { return re.subset_of(o.re) && im.subset_of(o.im); }
    bool strictly_inside(const Box& o) const {
        return re.strictly_inside(o.re) && im.strictly_inside(o.im);
    }

    Box operator+(const Box& o) const { return {re + o.re, im + o.im}; }
    Box operator-(const Box& o) const { return {re - o.re, im - o.im}; }
    Box operator*(const Box& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Box conj() const { return {re, -im}; }
    Box intersect(const Box& o) const { return {re.intersect(o.re), im.intersect(o.im)}; }
    Box outward(unsigned bits) const { return {re.outward(bits), im.outward(bits)}; }
};

/// Horner evaluation of a rational-coefficient polynomial (ascending degree)
/// over a rectangle / at a point.
Box eval_poly(const std::vector<Rat>& coeffs, const Box& z);
CRat eval_poly(const std::vector<Rat>& coeffs, const CRat& z);

}  // namespace eqca
