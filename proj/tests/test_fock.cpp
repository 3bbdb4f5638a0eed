#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eqca/fock.hpp"
#include "eqca/rng.hpp"

using namespace eqca;

namespace {

const FieldSpec& F() { return FieldSpec::zeta8(); }

Scalar inv_sqrt2() {
    // (zeta - zeta^3)/2 = 1/sqrt(2)
    const Scalar z = F().generator();
    return F().from_rational(Rat(1, 2)) * (z - pow(z, 3));
}

Config cfg1(long cell, int sym) {
    Config c;
    c.set(CellCoord{cell}, sym);
    return c;
}

StateVector random_vector(DetRng& rng, int n, int max_terms) {
    StateVector v(&F());
    const int terms = 1 + int(rng.below(std::uint64_t(max_terms)));
    for (int t = 0; t < terms; ++t) {
        Config c;
        for (long x = 0; x < 2; ++x) {
            int s = 1 + int(rng.below(std::uint64_t(n)));
            if (s > 1) c.set(CellCoord{x}, s);
        }
        Scalar a = F().from_rational(make_rat(Int(rng.range(-3, 3)), Int(rng.range(1, 3)))) *
                   pow(F().generator(), rng.below(8));
        v.add_term(c, a);
    }
    return v;
}

}  // namespace

TEST_CASE("set_cell basics") {
    StateVector vac = StateVector::basis(&F(), Config{});
    CHECK(set_cell(CellCoord{0}, 1, vac) == vac);  // writing q is the identity
    StateVector one = set_cell(CellCoord{0}, 2, vac);
    CHECK(one.term_count() == 1);
    CHECK(one.coeff(cfg1(0, 2)) == F().one());
}

TEST_CASE("set_cell is bilinear and enforces its precondition") {
    const Scalar alpha = F().from_rational(Rat(2, 3));
    const Scalar beta = pow(F().generator(), 2);
    StateVector u = StateVector::basis(&F(), cfg1(1, 2));
    StateVector w = StateVector::basis(&F(), cfg1(1, 3));
    StateVector combined = scale(alpha, u) + scale(beta, w);
    CHECK(set_cell(CellCoord{0}, 2, combined) ==
          scale(alpha, set_cell(CellCoord{0}, 2, u)) +
              scale(beta, set_cell(CellCoord{0}, 2, w)));
    CHECK_THROWS_AS(set_cell(CellCoord{1}, 2, u), std::domain_error);
}

TEST_CASE("inner product on basis configurations") {
    StateVector b1 = StateVector::basis(&F(), cfg1(0, 2));
    StateVector b2 = StateVector::basis(&F(), cfg1(0, 3));
    CHECK(inner(b1, b1) == F().one());
    CHECK(inner(b1, b2) == F().zero());
    const Scalar h = inv_sqrt2();
    StateVector plus = scale(h, b1) + scale(h, b2);
    StateVector minus = scale(h, b1) - scale(h, b2);
    CHECK(inner(plus, minus) == F().zero());
    CHECK(inner(plus, plus) == F().one());
}

TEST_CASE("inner is conjugate symmetric and positive definite") {
    DetRng rng(8);
    for (int i = 0; i < 100; ++i) {
        StateVector u = random_vector(rng, 3, 3);
        StateVector v = random_vector(rng, 3, 3);
        CHECK(inner(u, v) == conj(inner(v, u)));
        Scalar nrm = inner(u, u);
        CHECK(conj(nrm) == nrm);
        CHECK((nrm == F().zero()) == u.is_zero());
    }
}

TEST_CASE("scalar index round trips") {
    DetRng rng(17);
    for (int i = 0; i < 100; ++i) {
        std::vector<Rat> c(4);
        for (auto& x : c) x = make_rat(Int(rng.range(-9, 9)), Int(rng.range(1, 9)));
        Scalar a = F().from_coeffs(std::move(c));
        CHECK(scalar_unindex(scalar_index(a), &F()) == a);
    }
    CHECK_THROWS_AS(scalar_unindex(Nat(1), &F()), std::invalid_argument);
}

TEST_CASE("vector index: zero, singleton, round trips") {
    StateVector zero(&F());
    CHECK(vector_index(zero) == 0);

    StateVector vac = StateVector::basis(&F(), Config{});
    CHECK(vector_index(vac) == codec::seq_encode({scalar_index(F().one()), Nat(0)}));

    DetRng rng(23);
    for (int i = 0; i < 40; ++i) {
        StateVector v = random_vector(rng, 3, 4);
        CHECK(vector_unindex(vector_index(v), &F(), 1) == v);
    }
}

TEST_CASE("vector index is injective over a small exhaustive family") {
    // all vectors with <= 2 terms, scalars from a 4-element pool,
    // configurations over 2 cells with n = 2
    std::vector<Scalar> pool{F().one(), -F().one(), F().generator(),
                             F().from_rational(Rat(1, 2))};
    std::vector<Config> configs;
    for (int s0 = 1; s0 <= 2; ++s0)
        for (int s1 = 1; s1 <= 2; ++s1) {
            Config c;
            if (s0 > 1) c.set(codec::coord_unindex(0, 1), s0);
            if (s1 > 1) c.set(codec::coord_unindex(1, 1), s1);
            configs.push_back(c);
        }
    std::map<Nat, StateVector> seen;
    std::size_t built = 0;
    auto try_insert = [&](const StateVector& v) {
        Nat k = vector_index(v);
        auto [it, inserted] = seen.emplace(k, v);
        if (!inserted) CHECK(it->second == v);
        ++built;
    };
    try_insert(StateVector(&F()));
    for (std::size_t ci = 0; ci < configs.size(); ++ci)
        for (const auto& a : pool) {
            StateVector v(&F());
            v.add_term(configs[ci], a);
            try_insert(v);
            for (std::size_t cj = ci + 1; cj < configs.size(); ++cj)
                for (const auto& b : pool) {
                    StateVector w = v;
                    w.add_term(configs[cj], b);
                    try_insert(w);
                }
        }
    CHECK(built == 1 + 4 * 4 + 6 * 4 * 4);
    CHECK(seen.size() == built);  // no collisions
}

TEST_CASE("reduced density: product state is a rank-1 projector") {
    Config c;
    c.set(CellCoord{0}, 2);
    c.set(CellCoord{1}, 3);
    StateVector v = StateVector::basis(&F(), c);
    DensityMatrix d = reduced_density(v, Region{CellCoord{0}}, 3);
    CHECK(d.entries.rows() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(d.entries.at(i, j) == ((i == 1 && j == 1) ? F().one() : F().zero()));
    CHECK(trace(d) == inner(v, v));
}

TEST_CASE("reduced density of a Bell-style pair") {
    const Scalar h = inv_sqrt2();
    Config c22, c33;
    c22.set(CellCoord{0}, 2);
    c22.set(CellCoord{1}, 2);
    c33.set(CellCoord{0}, 3);
    c33.set(CellCoord{1}, 3);
    StateVector bell = scale(h, StateVector::basis(&F(), c22)) +
                       scale(h, StateVector::basis(&F(), c33));
    DensityMatrix d = reduced_density(bell, Region{CellCoord{0}}, 3);
    const Scalar half = F().from_rational(Rat(1, 2));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Scalar expect = (i == j && i >= 1) ? half : F().zero();
            CHECK(d.entries.at(i, j) == expect);
        }
    CHECK(trace(d) == F().one());
}

TEST_CASE("reduced density is Hermitian, trace-correct, and local") {
    DetRng rng(5);
    for (int i = 0; i < 1000; ++i) {
        StateVector v = random_vector(rng, 2, 3);
        if (v.is_zero()) continue;
        Region reg{CellCoord{0}};
        DensityMatrix d = reduced_density(v, reg, 2);
        CHECK(trace(d) == inner(v, v));
        for (std::size_t r = 0; r < d.entries.rows(); ++r)
            for (std::size_t c = 0; c < d.entries.cols(); ++c)
                CHECK(d.entries.at(r, c) == conj(d.entries.at(c, r)));

        // modifying the vector far away leaves the reduced density unchanged
        StateVector far(&F());
        for (const auto& [cfg, a] : v.terms()) {
            Config moved = cfg;
            moved.set(CellCoord{9}, 2);
            far.add_term(moved, a);
        }
        CHECK(reduced_density(far, reg, 2).entries == d.entries);
    }
}

TEST_CASE("reduced density rejects the zero vector") {
    StateVector zero(&F());
    CHECK_THROWS_AS(reduced_density(zero, Region{CellCoord{0}}, 2), std::domain_error);
}

TEST_CASE("reduced density is independent of term insertion order") {
    DetRng rng(61);
    for (int i = 0; i < 50; ++i) {
        StateVector v = random_vector(rng, 3, 4);
        if (v.is_zero()) continue;
        StateVector reversed(&F());
        std::vector<std::pair<Config, Scalar>> items(v.terms().begin(), v.terms().end());
        for (auto it = items.rbegin(); it != items.rend(); ++it)
            reversed.add_term(it->first, it->second);
        Region reg{CellCoord{0}};
        CHECK(reduced_density(v, reg, 3) == reduced_density(reversed, reg, 3));
    }
}

TEST_CASE("translation covariance of state vectors") {
    DetRng rng(77);
    for (int i = 0; i < 50; ++i) {
        StateVector u = random_vector(rng, 3, 3);
        StateVector v = random_vector(rng, 3, 3);
        CellCoord t{rng.range(-4, 4)};
        CHECK(inner(u.translated(t), v.translated(t)) == inner(u, v));
    }
}
