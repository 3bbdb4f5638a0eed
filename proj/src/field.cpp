#include "eqca/field.hpp"

#include <algorithm>
#include <cstdint>

namespace eqca {

namespace {

// ---------------------------------------------------------------------------
// Rational polynomial helpers. Polynomials are coefficient vectors in
// ascending degree; the zero polynomial is the empty vector.
// ---------------------------------------------------------------------------

using RatPoly = std::vector<Rat>;

RatPoly trim(RatPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

bool poly_is_zero(const RatPoly& p) { return p.empty(); }

RatPoly poly_deriv(const RatPoly& p) {
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(long(i)));
    return trim(std::move(d));
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(std::move(r));
}

RatPoly poly_sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return trim(std::move(a));
}

// Remainder of a by b (b nonzero).
RatPoly poly_rem(RatPoly a, const RatPoly& b) {
    a = trim(std::move(a));
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
        a = trim(std::move(a));
    }
    return a;
}

std::size_t poly_gcd_degree(RatPoly a, RatPoly b) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!poly_is_zero(b)) {
        RatPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? 0 : a.size() - 1;
}

// ---------------------------------------------------------------------------
// GF(p) helpers for the fast irreducibility sufficiency test.
// ---------------------------------------------------------------------------

using ModPoly = std::vector<std::uint64_t>;

ModPoly mod_trim(ModPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, std::uint64_t p) {
    a = mod_trim(std::move(a));
    while (a.size() >= b.size() && !a.empty()) {
        // b is monic here.
        std::uint64_t q = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = (a[shift + i] + p * p - q * b[i] % p) % p;
        a = mod_trim(std::move(a));
    }
    return a;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, const ModPoly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return mod_rem(std::move(r), f, p);
}

ModPoly mod_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
    a = mod_trim(std::move(a));
    b = mod_trim(std::move(b));
    while (!b.empty()) {
        // Make b monic before reducing.
        std::uint64_t lead = b.back(), inv_lead = 1;
        for (std::uint64_t e = p - 2; e; e >>= 1) {
            if (e & 1) inv_lead = inv_lead * lead % p;
            lead = lead * lead % p;
        }
        ModPoly bm = b;
        for (auto& x : bm) x = x * inv_lead % p;
        ModPoly r = mod_rem(a, bm, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^e mod f over GF(p), f monic.
ModPoly mod_xpow(const Nat& e, const ModPoly& f, std::uint64_t p) {
    ModPoly result{1};
    ModPoly base{0, 1};
    Nat n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) result = mod_mul(result, base, f, p);
        base = mod_mul(base, base, f, p);
        n >>= 1;
    }
    return result;
}

bool modp_irreducible(const std::vector<Int>& poly, std::uint64_t p) {
    const std::size_t n = poly.size() - 1;
    ModPoly f(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        Int r = poly[i] % Int(static_cast<unsigned long>(p));
        if (r < 0) r += Int(static_cast<unsigned long>(p));
        f[i] = r.get_ui();
    }
    if (f.back() != 1) return false;  // degree dropped (cannot happen: monic)
    // Squarefree mod p.
    ModPoly df;
    for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * (i % p) % p);
    df = mod_trim(std::move(df));
    if (df.empty() || mod_gcd(f, df, p).size() > 1) return false;
    // Rabin test: x^(p^n) == x mod f, and gcd(x^(p^(n/q)) - x, f) = 1 for
    // every prime q dividing n.
    Nat pn;
    mpz_ui_pow_ui(pn.get_mpz_t(), p, static_cast<unsigned long>(n));
    ModPoly xq = mod_xpow(pn, f, p);
    ModPoly x = mod_rem(ModPoly{0, 1}, f, p);
    if (xq != x) return false;
    std::vector<std::size_t> prime_divisors;
    std::size_t m = n;
    for (std::size_t q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            prime_divisors.push_back(q);
            while (m % q == 0) m /= q;
        }
    }
    if (m > 1) prime_divisors.push_back(m);
    for (std::size_t q : prime_divisors) {
        Nat pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(n / q));
        ModPoly diff = mod_xpow(pk, f, p);
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        diff = mod_trim(std::move(diff));
        if (mod_gcd(f, diff, p).size() != 1) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers for the exhaustive factor search.
// ---------------------------------------------------------------------------

Int int_poly_eval(const std::vector<Int>& p, const Int& x) {
    Int acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

// True when the monic divisor divides the dividend exactly over Z.
bool int_poly_divides(const std::vector<Int>& dividend, const std::vector<Int>& divisor) {
    std::vector<Int> rem = dividend;
    const std::size_t dn = divisor.size();
    while (rem.size() >= dn) {
        if (rem.back() == 0) {
            rem.pop_back();
            continue;
        }
        Int q = rem.back();  // divisor monic
        std::size_t shift = rem.size() - dn;
        for (std::size_t i = 0; i + 1 < dn; ++i) rem[shift + i] -= q * divisor[i];
        rem.pop_back();
    }
    return std::all_of(rem.begin(), rem.end(), [](const Int& c) { return c == 0; });
}

bool has_monic_integer_factor(const std::vector<Int>& poly, std::size_t k) {
    const Int p0 = int_poly_eval(poly, Int(0));
    const Int p1 = int_poly_eval(poly, Int(1));
    const Int pm1 = int_poly_eval(poly, Int(-1));
    // Mignotte-style bound for coefficients of a monic factor of a monic
    // integer polynomial: 2^k * ||poly||_2.
    Int norm_sq = 0;
    for (const auto& c : poly) norm_sq += c * c;
    Int bound = (Int(1) << k) * (sqrt(norm_sq) + 1);
    if (!bound.fits_slong_p())
        throw std::invalid_argument("irreducibility check budget exceeded");
    const long B = bound.get_si();

    // Constant terms of a factor divide P(0).
    std::vector<long> constants;
    for (long b0 = -B; b0 <= B; ++b0)
        if (b0 != 0 && p0 % Int(b0) == 0) constants.push_back(b0);

    double budget = double(constants.size());
    for (std::size_t i = 0; i + 1 < k; ++i) budget *= double(2 * B + 1);
    if (budget > 5e6)
        throw std::invalid_argument("irreducibility check budget exceeded");

    std::vector<Int> g(k + 1, Int(0));
    g[k] = 1;
    std::vector<long> mid(k > 1 ? k - 1 : 0, -B);

    for (long b0 : constants) {
        g[0] = b0;
        if (k == 1) {
            if (int_poly_eval(poly, Int(-b0)) == 0) return true;
            continue;
        }
        std::fill(mid.begin(), mid.end(), -B);
        while (true) {
            for (std::size_t i = 0; i < k - 1; ++i) g[i + 1] = mid[i];
            Int g1 = int_poly_eval(g, Int(1));
            Int gm1 = int_poly_eval(g, Int(-1));
            if (g1 != 0 && gm1 != 0 && p1 % g1 == 0 && pm1 % gm1 == 0 &&
                int_poly_divides(poly, g))
                return true;
            std::size_t i = 0;
            while (i < mid.size() && mid[i] == B) mid[i++] = -B;
            if (i == mid.size()) break;
            ++mid[i];
        }
    }
    return false;
}

}  // namespace

bool irreducible_over_q(const std::vector<Rat>& monic_poly) {
    if (monic_poly.size() < 2 || monic_poly.back() != 1)
        throw std::invalid_argument("minimal polynomial must be monic of degree >= 1");
    const std::size_t n = monic_poly.size() - 1;
    if (n == 1) return true;

    // Substitute x = y/c with c the lcm of the denominators; the result is a
    // monic integer polynomial with the same factorization pattern.
    Int c = 1;
    for (const auto& a : monic_poly) mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), a.get_den().get_mpz_t());
    std::vector<Int> P(monic_poly.size());
    Int scale = 1;
    for (std::size_t i = monic_poly.size(); i-- > 0;) {
        Rat v = monic_poly[i] * Rat(scale);
        P[i] = v.get_num();  // denominator is 1 by construction
        if (v.get_den() != 1) throw std::logic_error("integerization failed");
        scale *= c;
    }

    if (P[0] == 0) return false;

    {  // Squarefree over Q; a repeated factor means reducible for n >= 2.
        RatPoly rp(monic_poly.begin(), monic_poly.end());
        if (poly_gcd_degree(rp, poly_deriv(rp)) > 0) return false;
    }

    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                            29ULL, 31ULL, 37ULL, 41ULL, 43ULL, 47ULL, 53ULL, 59ULL,
                            61ULL, 67ULL, 71ULL, 73ULL, 79ULL, 83ULL, 89ULL, 97ULL}) {
        if (modp_irreducible(P, p)) return true;
    }

    for (std::size_t k = 1; k <= n / 2; ++k)
        if (has_monic_integer_factor(P, k)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Scalar arithmetic
// ---------------------------------------------------------------------------

const FieldSpec* check_same_spec(const Scalar& a, const Scalar& b) {
    if (a.spec == nullptr || b.spec == nullptr)
        throw std::invalid_argument("scalar without field");
    if (a.spec == b.spec || *a.spec == *b.spec) return a.spec;
    throw std::invalid_argument("scalar field mismatch");
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_spec(*this, o);
    return c == o.c;
}

Scalar Scalar::operator+(const Scalar& o) const {
    const FieldSpec* s = check_same_spec(*this, o);
    Scalar r{s, c};
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    const FieldSpec* s = check_same_spec(*this, o);
    Scalar r{s, c};
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    const FieldSpec* s = check_same_spec(*this, o);
    std::vector<Rat> prod(2 * s->degree() - 1, Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (std::size_t j = 0; j < o.c.size(); ++j) {
            if (o.c[j] == 0) continue;
            prod[i + j] += c[i] * o.c[j];
        }
    }
    return Scalar{s, s->reduce(std::move(prod))};
}

Scalar inv(const Scalar& a) {
    if (a.spec == nullptr) throw std::invalid_argument("scalar without field");
    if (a.is_zero()) throw std::domain_error("division by zero scalar");
    const FieldSpec* s = a.spec;
    // Extended Euclid on (a, m): find u with u*a = 1 mod m.
    RatPoly r0(a.c.begin(), a.c.end());
    r0 = trim(std::move(r0));
    RatPoly r1 = s->min_poly();
    RatPoly u0{Rat(1)}, u1{};
    while (!poly_is_zero(r1)) {
        // Quotient of r0 by r1.
        RatPoly q;
        RatPoly rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rat qc = rem.back() / r1.back();
            std::size_t shift = rem.size() - r1.size();
            if (q.size() < shift + 1) q.resize(shift + 1, Rat(0));
            q[shift] += qc;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= qc * r1[i];
            rem = trim(std::move(rem));
        }
        RatPoly u2 = poly_sub(u0, poly_mul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    // r0 = gcd(a, m); m irreducible and a != 0 imply it is a nonzero constant.
    if (r0.size() != 1 || r0[0] == 0) throw std::logic_error("inverse: gcd not constant");
    Rat scale = Rat(1) / r0[0];
    std::vector<Rat> out(s->degree(), Rat(0));
    for (std::size_t i = 0; i < u0.size() && i < out.size(); ++i) out[i] = u0[i] * scale;
    if (u0.size() > s->degree()) throw std::logic_error("inverse: cofactor degree too high");
    return Scalar{s, std::move(out)};
}

Scalar conj(const Scalar& a) {
    if (a.spec == nullptr) throw std::invalid_argument("scalar without field");
    const FieldSpec* s = a.spec;
    std::vector<Rat> out(s->degree(), Rat(0));
    for (std::size_t i = 0; i < s->degree(); ++i) {
        if (a.c[i] == 0) continue;
        const auto& col = s->conj_columns_[i];
        for (std::size_t j = 0; j < s->degree(); ++j) out[j] += a.c[i] * col[j];
    }
    return Scalar{s, std::move(out)};
}

Scalar abs_sq(const Scalar& a) { return a * conj(a); }

bool is_real(const Scalar& a) { return conj(a) == a; }

Scalar pow(Scalar base, unsigned long e) {
    if (base.spec == nullptr) throw std::invalid_argument("scalar without field");
    Scalar acc = base.spec->one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// FieldSpec
// ---------------------------------------------------------------------------

FieldSpec::FieldSpec(std::vector<Rat> min_poly, std::vector<Rat> conj_image, Box root_box)
    : min_poly_(std::move(min_poly)), conj_image_(std::move(conj_image)),
      root_box_(std::move(root_box)) {
    if (min_poly_.size() < 2)
        throw std::invalid_argument("minimal polynomial must have degree >= 1");
    if (min_poly_.back() != 1)
        throw std::invalid_argument("minimal polynomial must be monic");
    degree_ = min_poly_.size() - 1;
    if (!irreducible_over_q(min_poly_))
        throw std::invalid_argument(
            "bounded density of information: minimal polynomial is reducible over Q, "
            "so the scalar structure is not a field");
    min_poly_deriv_ = poly_deriv({min_poly_.begin(), min_poly_.end()});

    if (conj_image_.size() > degree_)
        throw std::invalid_argument("conjugation image degree exceeds field degree");
    conj_image_.resize(degree_, Rat(0));

    // Multiplication reduction table: x^(degree+k) mod m.
    std::vector<Rat> xn(degree_, Rat(0));
    for (std::size_t i = 0; i < degree_; ++i) xn[i] = -min_poly_[i];
    power_table_.push_back(xn);
    for (std::size_t k = 1; k + 1 < degree_; ++k) {
        const auto& prev = power_table_.back();
        std::vector<Rat> next(degree_, Rat(0));
        // multiply prev by x and reduce the overflow through x^degree.
        for (std::size_t i = 0; i + 1 < degree_; ++i) next[i + 1] = prev[i];
        const Rat& top = prev[degree_ - 1];
        if (top != 0)
            for (std::size_t i = 0; i < degree_; ++i) next[i] += top * power_table_[0][i];
        power_table_.push_back(std::move(next));
    }

    // Conjugation columns: conj_image^i mod m. Verifies that the image is a
    // root of m and that applying the map twice fixes the generator.
    {
        std::vector<Rat> power(degree_, Rat(0));
        power[0] = 1;
        conj_columns_.push_back(power);
        for (std::size_t i = 1; i < degree_; ++i) {
            // power *= conj_image (mod m), done through Scalar-style reduce.
            std::vector<Rat> prod(2 * degree_ - 1, Rat(0));
            for (std::size_t a = 0; a < degree_; ++a) {
                if (power[a] == 0) continue;
                for (std::size_t b = 0; b < degree_; ++b) {
                    if (conj_image_[b] == 0) continue;
                    prod[a + b] += power[a] * conj_image_[b];
                }
            }
            power = reduce(std::move(prod));
            conj_columns_.push_back(power);
        }
        // m(conj_image) mod m must vanish for the map to be a ring
        // endomorphism of Q[x]/(m).
        std::vector<Rat> image_of_m(degree_, Rat(0));
        {
            std::vector<Rat> power2(degree_, Rat(0));
            power2[0] = 1;
            for (std::size_t i = 0; i <= degree_; ++i) {
                for (std::size_t j = 0; j < degree_; ++j)
                    image_of_m[j] += min_poly_[i] * power2[j];
                if (i == degree_) break;
                std::vector<Rat> prod(2 * degree_ - 1, Rat(0));
                for (std::size_t a = 0; a < degree_; ++a) {
                    if (power2[a] == 0) continue;
                    for (std::size_t b = 0; b < degree_; ++b) {
                        if (conj_image_[b] == 0) continue;
                        prod[a + b] += power2[a] * conj_image_[b];
                    }
                }
                power2 = reduce(std::move(prod));
            }
        }
        for (const auto& v : image_of_m)
            if (v != 0)
                throw std::invalid_argument(
                    "conjugation image is not a root of the minimal polynomial");
        // Involution on the generator.
        std::vector<Rat> twice(degree_, Rat(0));
        for (std::size_t i = 0; i < degree_; ++i) {
            if (conj_image_[i] == 0) continue;
            for (std::size_t j = 0; j < degree_; ++j)
                twice[j] += conj_image_[i] * conj_columns_[i][j];
        }
        std::vector<Rat> x_vec(degree_, Rat(0));
        if (degree_ >= 2) x_vec[1] = 1;
        else x_vec[0] = conj_image_[0];  // degree 1: generator is rational
        if (degree_ >= 2 && twice != x_vec)
            throw std::invalid_argument("conjugation map is not an involution");
    }

    certify_root_box();
    check_conjugation_embedding();
}

std::vector<Rat> FieldSpec::reduce(std::vector<Rat> poly) const {
    std::vector<Rat> out(degree_, Rat(0));
    for (std::size_t i = 0; i < poly.size() && i < degree_; ++i) out[i] = poly[i];
    for (std::size_t i = degree_; i < poly.size(); ++i) {
        if (poly[i] == 0) continue;
        const auto& row = power_table_[i - degree_];
        for (std::size_t j = 0; j < degree_; ++j) out[j] += poly[i] * row[j];
    }
    return out;
}

Scalar FieldSpec::from_rational(const Rat& r) const {
    std::vector<Rat> c(degree_, Rat(0));
    c[0] = r;
    c[0].canonicalize();
    return Scalar{this, std::move(c)};
}

Scalar FieldSpec::generator() const {
    std::vector<Rat> c(degree_, Rat(0));
    if (degree_ == 1) c[0] = -min_poly_[0];
    else c[1] = 1;
    return Scalar{this, std::move(c)};
}

Scalar FieldSpec::from_coeffs(std::vector<Rat> coeffs) const {
    if (coeffs.size() > degree_)
        throw std::invalid_argument("coefficient vector longer than field degree");
    coeffs.resize(degree_, Rat(0));
    for (auto& c : coeffs) c.canonicalize();
    return Scalar{this, std::move(coeffs)};
}

// ---------------------------------------------------------------------------
// Root certification and refinement
// ---------------------------------------------------------------------------

namespace {

struct Krawczyk {
    bool certified = false;
    Box contracted;
};

// One Krawczyk step for m on the rectangle X. If the result lies strictly
// inside X, the rectangle provably contains exactly one (simple) root.
Krawczyk krawczyk_step(const RatPoly& m, const RatPoly& dm, const Box& X) {
    CRat mid = X.mid();
    CRat f_mid = eval_poly(m, mid);
    CRat df_mid = eval_poly(dm, mid);
    if (df_mid.is_zero()) return {false, X};
    CRat y = df_mid.inverse();
    Box b = Box::point(CRat(Rat(1), Rat(0))) - Box::point(y) * eval_poly(dm, X);
    Box k = Box::point(mid - y * f_mid) + b * (X - Box::point(mid));
    if (k.strictly_inside(X)) return {true, k.intersect(X)};
    return {false, X};
}

bool box_excludes_root(const RatPoly& m, const Box& b) {
    return !eval_poly(m, b).contains_zero();
}

std::vector<Box> split_box(const Box& b) {
    std::vector<RatInterval> res, ims;
    if (b.re.width() > 0) {
        Rat m = b.re.mid();
        res.push_back({b.re.lo, m});
        res.push_back({m, b.re.hi});
    } else {
        res.push_back(b.re);
    }
    if (b.im.width() > 0) {
        Rat m = b.im.mid();
        ims.push_back({b.im.lo, m});
        ims.push_back({m, b.im.hi});
    } else {
        ims.push_back(b.im);
    }
    std::vector<Box> out;
    for (const auto& r : res)
        for (const auto& i : ims) out.emplace_back(r, i);
    return out;
}

Box hull_of(const std::vector<Box>& boxes) {
    Box h = boxes.front();
    for (std::size_t i = 1; i < boxes.size(); ++i) {
        h.re = h.re.hull(boxes[i].re);
        h.im = h.im.hull(boxes[i].im);
    }
    return h;
}

unsigned grid_bits_for(const Rat& width) {
    // Enough bits that outward rounding adds at most width/1024 per side.
    if (width <= 0) return 64;
    Rat inv = Rat(1024) / width;
    Int num = inv.get_num() / inv.get_den() + 1;
    return static_cast<unsigned>(mpz_sizeinbase(num.get_mpz_t(), 2)) + 1;
}

}  // namespace

void FieldSpec::certify_root_box() {
    const RatPoly& m = min_poly_;
    const RatPoly& dm = min_poly_deriv_;
    if (root_box_.re.lo > root_box_.re.hi || root_box_.im.lo > root_box_.im.hi)
        throw std::invalid_argument("root box corners out of order");

    std::vector<Box> candidates{root_box_};
    for (int depth = 0; depth <= 28; ++depth) {
        Box hull = hull_of(candidates);
        Krawczyk k = krawczyk_step(m, dm, hull);
        if (k.certified) {
            // All excluded sub-boxes are root-free and the hull of the
            // survivors contains exactly one root, so the original box
            // isolates exactly one root.
            std::lock_guard<std::mutex> lock(*chain_mutex_);
            chain_.clear();
            chain_.push_back(k.contracted);
            return;
        }
        std::vector<Box> next;
        for (const auto& b : candidates)
            for (const auto& q : split_box(b))
                if (!box_excludes_root(m, q)) next.push_back(q);
        if (next.empty())
            throw std::invalid_argument(
                "root box contains no root of the minimal polynomial");
        if (next.size() > 64) break;
        candidates = std::move(next);
    }
    throw std::invalid_argument(
        "could not certify that the root box isolates a single root "
        "(supply a tighter rectangle)");
}

Box FieldSpec::enclosure(const Rat& max_width) const {
    std::lock_guard<std::mutex> lock(*chain_mutex_);
    if (chain_.empty()) throw std::logic_error("root box not certified");
    int stall_guard = 0;
    while (chain_.back().max_width() > max_width) {
        const Box& current = chain_.back();
        Krawczyk k = krawczyk_step(min_poly_, min_poly_deriv_, current);
        Box refined = k.contracted.intersect(current);
        // Outward rounding keeps endpoint sizes bounded; every 8th iteration
        // keeps the exact value in case contraction is slow.
        if (++stall_guard % 8 != 0 && refined.max_width() > 0)
            refined = refined.outward(grid_bits_for(refined.max_width())).intersect(current);
        if (stall_guard > 4096)
            throw std::logic_error("root refinement failed to converge");
        chain_.push_back(refined);
        if (refined.max_width() == 0) break;
    }
    return chain_.back();
}

void FieldSpec::check_conjugation_embedding() const {
    // The designated embedding must turn the configured conjugation into
    // complex conjugation: the image of the generator, evaluated at the
    // embedding, has to land in the mirrored root box (which isolates the
    // complex-conjugate root).
    Box mirrored = root_box_.conj();
    Rat width = Rat(1, 1024);
    RatPoly sigma(conj_image_.begin(), conj_image_.end());
    for (int attempt = 0; attempt < 6; ++attempt) {
        Box x = enclosure(width);
        Box image = eval_poly(sigma, x);
        if (image.subset_of(mirrored)) return;
        width /= 4096;
    }
    throw std::invalid_argument(
        "conjugation map does not match the designated root embedding");
}

const FieldSpec& FieldSpec::zeta8() {
    static const FieldSpec spec = [] {
        std::vector<Rat> m{Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)};
        std::vector<Rat> conj_image{Rat(0), Rat(0), Rat(0), Rat(-1)};
        // e^{i pi/4} = (sqrt2/2, sqrt2/2) lies in [11/16, 23/32]^2.
        Box box{RatInterval{Rat(11, 16), Rat(23, 32)}, RatInterval{Rat(11, 16), Rat(23, 32)}};
        return FieldSpec(std::move(m), std::move(conj_image), std::move(box));
    }();
    return spec;
}

// ---------------------------------------------------------------------------
// approx_real
// ---------------------------------------------------------------------------

RatInterval approx_real(const Scalar& a, const Rat& eps) {
    if (a.spec == nullptr) throw std::invalid_argument("scalar without field");
    if (eps <= 0) throw std::invalid_argument("approx_real: eps must be positive");
    if (!is_real(a))
        throw std::domain_error("approx_real: element is not fixed by conjugation");
    if (a.is_rational()) return RatInterval::point(a.c[0]);

    RatPoly poly(a.c.begin(), a.c.end());
    Rat width = eps;
    for (int attempt = 0; attempt < 64; ++attempt) {
        Box x = a.spec->enclosure(width);
        Box value = eval_poly(poly, x);
        if (!value.im.contains_zero())
            throw std::logic_error("approx_real: real element with nonreal enclosure");
        if (value.re.width() <= eps) return value.re;
        width /= 64;
    }
    throw std::logic_error("approx_real failed to converge");
}

}  // namespace eqca
