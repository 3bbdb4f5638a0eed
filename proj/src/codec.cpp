#include "eqca/codec.hpp"

#include <algorithm>

namespace eqca::codec {

Nat pair(const Nat& n, const Nat& p) {
    require_nat(n, "pair");
    require_nat(p, "pair");
    Nat s = n + p;
    return s * (s + 1) / 2 + n;
}

std::pair<Nat, Nat> unpair(const Nat& k) {
    require_nat(k, "unpair");
    // w = floor((sqrt(8k+1)-1)/2) is the diagonal; k - w(w+1)/2 walks along it.
    Nat w = (sqrt(8 * k + 1) - 1) / 2;
    Nat t = w * (w + 1) / 2;
    Nat n = k - t;
    Nat p = w - n;
    return {n, p};
}

Nat succ_pair(const Nat& n, const Nat& p) { return pair(n, p) + 1; }

std::pair<Nat, Nat> unsucc_pair(const Nat& k) {
    require_nat(k, "unsucc_pair");
    if (k == 0) throw std::domain_error("unsucc_pair: 0 is not in the codomain");
    return unpair(k - 1);
}

Nat fold_int(const Int& x) {
    if (x >= 0) return 2 * x;
    return -2 * x - 1;
}

Int unfold_int(const Nat& k) {
    require_nat(k, "unfold_int");
    if (k % 2 == 0) return k / 2;
    return -((k + 1) / 2);
}

Nat coord_index(const CellCoord& c) {
    Nat acc = fold_int(c.c.back());
    for (std::size_t i = c.dim() - 1; i-- > 0;) acc = pair(fold_int(c.c[i]), acc);
    return acc;
}

CellCoord coord_unindex(const Nat& k, std::size_t d) {
    if (d == 0) throw std::invalid_argument("coord_unindex: dimension must be >= 1");
    require_nat(k, "coord_unindex");
    std::vector<Int> comps;
    comps.reserve(d);
    Nat rest = k;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        auto [a, b] = unpair(rest);
        comps.push_back(unfold_int(a));
        rest = b;
    }
    comps.push_back(unfold_int(rest));
    return CellCoord(std::move(comps));
}

double seq_encode_bits_estimate(std::size_t len, double entry_bits) {
    double b = 1.0;
    for (std::size_t i = 0; i < len; ++i) {
        b = 2.0 * std::max(entry_bits, b) + 2.0;
        if (b > 4.6e18) return 4.6e18;
    }
    return b;
}

Nat seq_encode(const std::vector<Nat>& js) {
    double max_bits = 1.0;
    for (const auto& j : js) {
        require_nat(j, "seq_encode");
        max_bits = std::max(max_bits, double(mpz_sizeinbase(j.get_mpz_t(), 2)));
    }
    if (seq_encode_bits_estimate(js.size(), max_bits) > kMaxEncodedBits)
        throw std::invalid_argument("seq_encode: encoded index exceeds the size budget");
    Nat acc = 0;
    for (std::size_t i = js.size(); i-- > 0;) acc = succ_pair(js[i], acc);
    return acc;
}

std::vector<Nat> seq_decode(const Nat& k) {
    require_nat(k, "seq_decode");
    std::vector<Nat> out;
    Nat rest = k;
    while (rest != 0) {
        auto [j, next] = unsucc_pair(rest);
        out.push_back(j);
        rest = next;
    }
    return out;
}

}  // namespace eqca::codec
