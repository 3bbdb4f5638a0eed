#include "eqca/fock.hpp"

#include <algorithm>
#include <cmath>

namespace eqca {

StateVector StateVector::basis(const FieldSpec* spec, const Config& c) {
    StateVector v(spec);
    v.terms_.emplace(c, spec->one());
    return v;
}

Scalar StateVector::coeff(const Config& c) const {
    if (spec_ == nullptr) throw std::invalid_argument("state vector without field");
    auto it = terms_.find(c);
    return it == terms_.end() ? spec_->zero() : it->second;
}

void StateVector::add_term(const Config& c, const Scalar& coefficient) {
    if (spec_ == nullptr) {
        spec_ = coefficient.spec;
    }
    if (coefficient.spec != spec_ && *coefficient.spec != *spec_)
        throw std::invalid_argument("scalar field mismatch in state vector");
    auto it = terms_.find(c);
    if (it == terms_.end()) {
        if (!coefficient.is_zero()) terms_.emplace(c, coefficient);
        return;
    }
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
}

StateVector StateVector::operator+(const StateVector& o) const {
    StateVector r = *this;
    if (r.spec_ == nullptr) r.spec_ = o.spec_;
    for (const auto& [c, a] : o.terms_) r.add_term(c, a);
    return r;
}

StateVector StateVector::operator-(const StateVector& o) const {
    StateVector r = *this;
    if (r.spec_ == nullptr) r.spec_ = o.spec_;
    for (const auto& [c, a] : o.terms_) r.add_term(c, -a);
    return r;
}

bool StateVector::operator==(const StateVector& o) const { return terms_ == o.terms_; }

StateVector StateVector::translated(const CellCoord& t) const {
    StateVector r(spec_);
    for (const auto& [c, a] : terms_) r.terms_.emplace(c.translated(t), a);
    return r;
}

Region StateVector::support() const {
    Region out;
    for (const auto& [c, a] : terms_)
        for (const auto& [cell, s] : c.cells()) out.insert(cell);
    return out;
}

int StateVector::max_symbol() const {
    int m = kQuiescent;
    for (const auto& [c, a] : terms_) m = std::max(m, c.max_symbol());
    return m;
}

StateVector scale(const Scalar& a, const StateVector& v) {
    StateVector r(v.spec());
    if (a.is_zero()) return r;
    for (const auto& [c, x] : v.terms()) r.add_term(c, a * x);
    return r;
}

StateVector set_cell(const CellCoord& c, int e, const StateVector& v) {
    if (e < 1) throw std::invalid_argument("symbol indices start at 1");
    for (const auto& [cfg, a] : v.terms())
        if (cfg.get(c) != kQuiescent)
            throw std::domain_error("set_cell: cell is not quiescent in every term");
    StateVector r(v.spec());
    for (const auto& [cfg, a] : v.terms()) {
        Config written = cfg;
        written.set(c, e);
        r.add_term(written, a);
    }
    return r;
}

Scalar inner(const StateVector& u, const StateVector& v) {
    const FieldSpec* spec = u.spec() ? u.spec() : v.spec();
    if (spec == nullptr) throw std::invalid_argument("inner product of spec-less vectors");
    Scalar acc = spec->zero();
    const auto& a = u.terms();
    const auto& b = v.terms();
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            acc += conj(ia->second) * ib->second;
            ++ia;
            ++ib;
        }
    }
    return acc;
}

Nat scalar_index(const Scalar& a) {
    if (a.spec == nullptr) throw std::invalid_argument("scalar without field");
    std::vector<Nat> seq;
    seq.reserve(2 * a.c.size());
    for (const auto& r : a.c) {
        seq.push_back(codec::fold_int(r.get_num()));
        seq.push_back(codec::fold_int(r.get_den()));
    }
    return codec::seq_encode(seq);
}

Scalar scalar_unindex(const Nat& k, const FieldSpec* spec) {
    const auto seq = codec::seq_decode(k);
    if (seq.size() != 2 * spec->degree())
        throw std::invalid_argument("scalar index has wrong coefficient count");
    std::vector<Rat> coeffs(spec->degree());
    for (std::size_t i = 0; i < spec->degree(); ++i) {
        Int num = codec::unfold_int(seq[2 * i]);
        Int den = codec::unfold_int(seq[2 * i + 1]);
        if (den <= 0) throw std::invalid_argument("scalar index with nonpositive denominator");
        Rat r(num, den);
        Rat canonical = r;
        canonical.canonicalize();
        if (canonical.get_num() != num || canonical.get_den() != den)
            throw std::invalid_argument("scalar index not in lowest terms");
        coeffs[i] = canonical;
    }
    return Scalar{spec, std::move(coeffs)};
}

double vector_index_bits_estimate(const StateVector& v) {
    double max_entry = 1.0;
    for (const auto& [c, a] : v.terms()) {
        Config cfg = c;
        max_entry = std::max(max_entry, config_index_bits_estimate(cfg));
        double scalar_bits = 1.0;
        for (const auto& r : a.c) {
            scalar_bits = std::max(scalar_bits,
                                   double(mpz_sizeinbase(r.get_num().get_mpz_t(), 2)) + 1);
            scalar_bits = std::max(scalar_bits,
                                   double(mpz_sizeinbase(r.get_den().get_mpz_t(), 2)) + 1);
        }
        max_entry = std::max(max_entry,
                             codec::seq_encode_bits_estimate(2 * a.c.size(), scalar_bits));
    }
    return codec::seq_encode_bits_estimate(2 * v.term_count(), max_entry);
}

Nat vector_index(const StateVector& v) {
    if (v.is_zero()) return 0;
    if (vector_index_bits_estimate(v) > codec::kMaxEncodedBits)
        throw std::invalid_argument("vector_index: encoded index exceeds the size budget");
    std::vector<std::pair<Nat, Nat>> items;  // (config index, scalar index)
    items.reserve(v.term_count());
    for (const auto& [c, a] : v.terms())
        items.emplace_back(config_index(c), scalar_index(a));
    std::sort(items.begin(), items.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Nat> seq;
    seq.reserve(2 * items.size());
    for (const auto& [ci, si] : items) {
        seq.push_back(si);
        seq.push_back(ci);
    }
    return codec::seq_encode(seq);
}

StateVector vector_unindex(const Nat& k, const FieldSpec* spec, std::size_t d) {
    StateVector v(spec);
    const auto seq = codec::seq_decode(k);
    if (seq.size() % 2 != 0)
        throw std::invalid_argument("vector index does not hold scalar/config pairs");
    Nat prev_config_index = 0;
    for (std::size_t i = 0; i < seq.size(); i += 2) {
        if (i > 0 && seq[i + 1] <= prev_config_index)
            throw std::invalid_argument("vector index terms not strictly ascending");
        prev_config_index = seq[i + 1];
        Scalar a = scalar_unindex(seq[i], spec);
        if (a.is_zero()) throw std::invalid_argument("vector index with zero coefficient");
        v.add_term(config_unindex(seq[i + 1], d), a);
    }
    return v;
}

namespace {

std::size_t region_dim(std::size_t cells, int n) {
    std::size_t dim = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        if (dim > 256 / std::size_t(n))
            throw std::invalid_argument("region too large for an exact density matrix");
        dim *= std::size_t(n);
    }
    return dim;
}

}  // namespace

DensityMatrix reduced_density(const StateVector& v, const Region& reg, int n) {
    if (v.is_zero()) throw std::domain_error("reduced density of the zero vector");
    if (v.max_symbol() > n)
        throw std::invalid_argument("state symbol outside the declared alphabet");
    std::vector<CellCoord> cells(reg.begin(), reg.end());
    const std::size_t dim = region_dim(cells.size(), n);

    // Group terms by their exterior restriction; each group contributes a
    // rank-one block sum over region patterns.
    std::map<Config, std::vector<std::pair<std::size_t, Scalar>>> by_exterior;
    for (const auto& [cfg, a] : v.terms()) {
        Config exterior = cfg;
        std::size_t pattern = 0;
        for (const auto& c : cells) {
            pattern = pattern * std::size_t(n) + std::size_t(cfg.get(c) - 1);
            exterior.set(c, kQuiescent);
        }
        by_exterior[exterior].emplace_back(pattern, a);
    }

    DensityMatrix out{std::move(cells), ScalarMatrix(v.spec(), dim, dim)};
    for (const auto& [exterior, entries] : by_exterior)
        for (const auto& [row, arow] : entries)
            for (const auto& [col, acol] : entries)
                out.entries.at(row, col) += arow * conj(acol);
    return out;
}

Scalar trace(const DensityMatrix& d) {
    Scalar acc = d.entries.spec()->zero();
    for (std::size_t i = 0; i < d.entries.rows(); ++i) acc += d.entries.at(i, i);
    return acc;
}

}  // namespace eqca
