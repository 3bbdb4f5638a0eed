#include "eqca/interval.hpp"

namespace eqca {

namespace {

Rat round_down(const Rat& x, unsigned bits) {
    Int scaled_num = x.get_num() << bits;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den().get_mpz_t());
    Rat r(q, Int(1) << bits);
    r.canonicalize();
    return r;
}

Rat round_up(const Rat& x, unsigned bits) {
    Int scaled_num = x.get_num() << bits;
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den().get_mpz_t());
    Rat r(q, Int(1) << bits);
    r.canonicalize();
    return r;
}

}  // namespace

RatInterval RatInterval::outward(unsigned bits) const {
    return {round_down(lo, bits), round_up(hi, bits)};
}

Box eval_poly(const std::vector<Rat>& coeffs, const Box& z) {
    Box acc = Box::point(CRat());
    for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = acc * z + Box::point(CRat(coeffs[i], Rat(0)));
    return acc;
}

CRat eval_poly(const std::vector<Rat>& coeffs, const CRat& z) {
    CRat acc;
    for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = acc * z + CRat(coeffs[i], Rat(0));
    return acc;
}

}  // namespace eqca
