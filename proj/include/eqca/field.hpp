#pragma once

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqca/interval.hpp"
#include "eqca/numbers.hpp"

namespace eqca {

class FieldSpec;

/// An element of the number field Q[x]/(m), stored as a coefficient vector
/// of exact rationals in the generator basis (ascending powers, length equal
/// to the field degree). Coefficients are kept canonical, so equality is
/// coefficient-wise.
struct Scalar {
    const FieldSpec* spec = nullptr;
    std::vector<Rat> c;

    bool is_zero() const {
        for (const auto& x : c)
            if (x != 0) return false;
        return true;
    }
    /// True when all generator-power coefficients above degree 0 vanish.
    bool is_rational() const {
        for (std::size_t i = 1; i < c.size(); ++i)
            if (c[i] != 0) return false;
        return true;
    }
    const Rat& rational_value() const {
        if (!is_rational()) throw std::domain_error("scalar is not rational");
        return c[0];
    }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
};

/// Multiplicative inverse via the extended Euclidean algorithm on
/// polynomials; throws std::domain_error on zero.
Scalar inv(const Scalar& a);

/// Complex conjugation: the ring automorphism sending the generator to the
/// configured conjugation image. Involutive.
Scalar conj(const Scalar& a);

/// a * conj(a); always fixed by conj (an element of the real subfield).
Scalar abs_sq(const Scalar& a);

/// True iff conj(a) = a.
bool is_real(const Scalar& a);

/// Certified rational interval of width <= eps containing the real embedding
/// of a conj-fixed element. Throws std::domain_error for non-real input.
/// Successive calls with shrinking eps return nested intervals.
RatInterval approx_real(const Scalar& a, const Rat& eps);

Scalar pow(Scalar base, unsigned long e);

/// Exact irreducibility test over Q for a monic rational polynomial
/// (ascending coefficients, leading coefficient 1). Combines a finite-field
/// sufficiency test with a Mignotte-bounded integer factor search.
bool irreducible_over_q(const std::vector<Rat>& monic_poly);

/// A fixed finite extension of Q presented as Q[x]/(m) for a monic
/// irreducible m, together with the image of the generator under complex
/// conjugation and an isolating rectangle designating the embedding root.
/// All invariants are verified at construction:
///   - m irreducible over Q,
///   - the conjugation image is a root of m and the map is an involution,
///   - the rectangle isolates exactly one root of m (certified by
///     subdivision plus a Krawczyk contraction; boxes that cannot be
///     certified are rejected),
///   - the designated embedding turns the configured conjugation into
///     complex conjugation.
class FieldSpec {
public:
    FieldSpec(std::vector<Rat> min_poly, std::vector<Rat> conj_image, Box root_box);

    /// The default field Q(zeta_8), m(x) = x^4 + 1, embedding e^{i pi/4}.
    /// Contains i and 1/sqrt(2), hence the scalars of the standard
    /// universal gate set.
    static const FieldSpec& zeta8();

    std::size_t degree() const { return degree_; }
    const std::vector<Rat>& min_poly() const { return min_poly_; }
    const std::vector<Rat>& conj_image() const { return conj_image_; }
    const Box& root_box() const { return root_box_; }

    bool operator==(const FieldSpec& o) const {
        return min_poly_ == o.min_poly_ && conj_image_ == o.conj_image_;
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    Scalar zero() const { return from_rational(Rat(0)); }
    Scalar one() const { return from_rational(Rat(1)); }
    Scalar from_rational(const Rat& r) const;
    Scalar from_int(long v) const { return from_rational(Rat(v)); }
    Scalar generator() const;
    Scalar from_coeffs(std::vector<Rat> coeffs) const;

    /// Nested certified enclosure of the embedding root with max side width
    /// <= max_width. Thread-safe; enclosures refine monotonically.
    Box enclosure(const Rat& max_width) const;

private:
    friend struct Scalar;
    friend Scalar inv(const Scalar&);
    friend Scalar conj(const Scalar&);
    friend RatInterval approx_real(const Scalar&, const Rat&);

    std::vector<Rat> reduce(std::vector<Rat> poly) const;
    void certify_root_box();
    void check_conjugation_embedding() const;

    std::size_t degree_ = 0;
    std::vector<Rat> min_poly_;
    std::vector<Rat> min_poly_deriv_;
    std::vector<Rat> conj_image_;
    Box root_box_;
    // x^(degree+k) mod m for k = 0..degree-2, used by multiplication.
    std::vector<std::vector<Rat>> power_table_;
    // column i = conj_image^i mod m, so conj is a matrix-vector product.
    std::vector<std::vector<Rat>> conj_columns_;

    // Lazily refined, nested enclosure chain; the mutex lives behind a
    // pointer so the spec stays movable.
    std::unique_ptr<std::mutex> chain_mutex_ = std::make_unique<std::mutex>();
    mutable std::vector<Box> chain_;
};

const FieldSpec* check_same_spec(const Scalar& a, const Scalar& b);

}  // namespace eqca
