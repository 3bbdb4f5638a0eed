#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eqca/gallery.hpp"

using namespace eqca;
using namespace eqca::gallery;

namespace {

std::vector<std::uint64_t> range_indices(std::uint64_t hi) {
    std::vector<std::uint64_t> v;
    for (std::uint64_t i = 0; i <= hi; ++i) v.push_back(i);
    return v;
}

std::vector<Oracle> builtins() {
    return {Oracle::primality(), Oracle::parity(), Oracle::bitstring("110100110010")};
}

std::vector<int> bits_of(const DemoResult& r) {
    std::vector<int> out;
    for (const auto& b : r.recovered) out.push_back(b.bit);
    return out;
}

}  // namespace

TEST_CASE("oracle built-ins") {
    Oracle p = Oracle::primality();
    CHECK(p.bit(0) == 0);
    CHECK(p.bit(1) == 0);
    CHECK(p.bit(2) == 1);
    CHECK(p.bit(4) == 0);
    CHECK(p.bit(5) == 1);
    CHECK(p.bit(97) == 1);
    Oracle par = Oracle::parity();
    CHECK(par.bit(6) == 0);
    CHECK(par.bit(7) == 1);
    Oracle bs = Oracle::bitstring("1010");
    CHECK(bs.bit(0) == 1);
    CHECK(bs.bit(1) == 0);
    CHECK(bs.bit(2) == 1);
    CHECK(bs.bit(3) == 0);
    CHECK(bs.bit(9) == 0);  // beyond the string
    CHECK_THROWS_AS(Oracle::bitstring("10x"), std::invalid_argument);
}

TEST_CASE("space demo recovers bits for all built-in oracles") {
    for (const auto& oracle : builtins()) {
        DemoResult r = demo_space_inhomogeneous(oracle, range_indices(31));
        CHECK(r.matches_oracle);
        CHECK(r.recovered.size() == 32);
    }
    DemoResult z = demo_space_inhomogeneous(Oracle::all_zeros(), range_indices(7));
    CHECK(z.matches_oracle);
    for (const auto& b : z.recovered) CHECK(b.bit == 0);
}

TEST_CASE("time demo flips exactly at oracle steps") {
    DemoResult r = demo_time_inhomogeneous(Oracle::primality(), 7);
    CHECK(r.matches_oracle);
    CHECK(bits_of(r) == std::vector<int>{0, 0, 1, 1, 0, 1, 0});
    DemoResult two = demo_time_inhomogeneous(Oracle::bitstring("11"), 2);
    CHECK(two.matches_oracle);
    CHECK(bits_of(two) == std::vector<int>{1, 1});
}

TEST_CASE("density demo enumeration examples") {
    // all-ones oracle: k is the k-th member, image 2k, always even
    DemoResult ones = demo_unbounded_density(Oracle::all_ones(), 5);
    CHECK(ones.matches_oracle);
    for (const auto& b : ones.recovered) CHECK(b.bit == 1);
    // all-zeros: image 2k+1, always odd
    DemoResult zeros = demo_unbounded_density(Oracle::all_zeros(), 5);
    CHECK(zeros.matches_oracle);
    for (const auto& b : zeros.recovered) CHECK(b.bit == 0);
    // primality at k=2: 2 is the 0th member, image 0, even
    DemoResult prime = demo_unbounded_density(Oracle::primality(), 2);
    CHECK(prime.matches_oracle);
    CHECK(bits_of(prime) == std::vector<int>{0, 0, 1});
}

TEST_CASE("velocity demo negates the head across arbitrarily long runs") {
    DemoResult r = demo_unbounded_velocity(Oracle::bitstring("01"), 1, 0);
    CHECK(r.matches_oracle);
    CHECK(r.recovered.front().bit == 1);
    DemoResult zero_len = demo_unbounded_velocity(Oracle::bitstring("01"), 0, 1);
    CHECK(zero_len.matches_oracle);
    CHECK(zero_len.recovered.front().bit == 0);
    DemoResult none = demo_unbounded_velocity(Oracle::all_zeros(), 9, 1);
    CHECK(none.recovered.front().bit == 0);
    CHECK(none.matches_oracle);
    CHECK_THROWS_AS(demo_unbounded_velocity(Oracle::parity(), 2, 5), std::domain_error);
}

TEST_CASE("non-quiescent input demo hands back planted bits") {
    DemoResult r = demo_nonquiescent_input(Oracle::primality(), 6);
    CHECK(r.matches_oracle);
    CHECK(bits_of(r) == std::vector<int>{0, 0, 1, 1, 0, 1});
    DemoResult empty = demo_nonquiescent_input(Oracle::parity(), 0);
    CHECK(empty.matches_oracle);
    CHECK(empty.recovered.empty());
}

TEST_CASE("all five deterministic demos, three oracles, indices 0..31") {
    for (const auto& oracle : builtins()) {
        CHECK(demo_space_inhomogeneous(oracle, range_indices(31)).matches_oracle);
        CHECK(demo_time_inhomogeneous(oracle, 32).matches_oracle);
        CHECK(demo_unbounded_density(oracle, 31).matches_oracle);
        for (std::uint64_t i = 0; i <= 31; ++i)
            CHECK(demo_unbounded_velocity(oracle, i, 0).matches_oracle);
        CHECK(demo_nonquiescent_input(oracle, 32).matches_oracle);
    }
}

TEST_CASE("restored hypotheses recover nothing: outputs are oracle-independent") {
    const Oracle a = Oracle::primality();
    const Oracle b = Oracle::parity();
    CHECK(bits_of(demo_space_inhomogeneous(a, range_indices(15), true)) ==
          bits_of(demo_space_inhomogeneous(b, range_indices(15), true)));
    CHECK(bits_of(demo_time_inhomogeneous(a, 16, true)) ==
          bits_of(demo_time_inhomogeneous(b, 16, true)));
    CHECK(bits_of(demo_unbounded_density(a, 15, true)) ==
          bits_of(demo_unbounded_density(b, 15, true)));
    for (std::uint64_t i = 0; i < 8; ++i)
        CHECK(bits_of(demo_unbounded_velocity(a, i, 0, true)) ==
              bits_of(demo_unbounded_velocity(b, i, 0, true)));
    CHECK(bits_of(demo_nonquiescent_input(a, 16, true)) ==
          bits_of(demo_nonquiescent_input(b, 16, true)));
    CHECK(bits_of(demo_stochastic_correlation(a, 3, 2000, 9, true)) ==
          bits_of(demo_stochastic_correlation(b, 3, 2000, 9, true)));
}

TEST_CASE("scalar extraction at u = 3/5") {
    const auto& f = FieldSpec::zeta8();
    auto r = demo_scalar_extraction(f.from_rational(Rat(3, 5)), 10000, 20240001);
    CHECK(r.exact_p0 == Rat(9, 25));
    Rat err = r.estimate - r.exact_p0;
    if (err < 0) err = -err;
    CHECK(err <= Rat(2, 100));
    // determinism
    auto r2 = demo_scalar_extraction(f.from_rational(Rat(3, 5)), 10000, 20240001);
    CHECK(r2.estimate == r.estimate);
}

TEST_CASE("scalar extraction at u = 1 and u = 1/sqrt(2)") {
    const auto& f = FieldSpec::zeta8();
    auto all0 = demo_scalar_extraction(f.one(), 300, 5);
    CHECK(all0.exact_p0 == Rat(1));
    CHECK(all0.estimate == Rat(1));

    const Scalar z = f.generator();
    const Scalar inv_sqrt2 = f.from_rational(Rat(1, 2)) * (z - pow(z, 3));
    auto r = demo_scalar_extraction(inv_sqrt2, 10000, 77);
    CHECK(r.exact_p0 == Rat(1, 2));
    Rat err = r.estimate - r.exact_p0;
    if (err < 0) err = -err;
    CHECK(err <= Rat(2, 100));
}

TEST_CASE("scalar extraction rejects bad amplitudes") {
    const auto& f = FieldSpec::zeta8();
    CHECK_THROWS_AS(demo_scalar_extraction(f.generator(), 10, 1), std::domain_error);
    CHECK_THROWS_AS(demo_scalar_extraction(-f.one(), 10, 1), std::domain_error);
    CHECK_THROWS_AS(demo_scalar_extraction(f.from_rational(Rat(2)), 10, 1),
                    std::domain_error);
    // in Q(zeta_8), sqrt(1 - (1/3)^2) = 4/(3 sqrt 2) is representable
    auto third = demo_scalar_extraction(f.from_rational(Rat(1, 3)), 4000, 8);
    CHECK(third.exact_p0 == Rat(1, 9));
    // but Q(i) has no 1/sqrt(2), so the same amplitude is rejected there
    FieldSpec gauss({Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(-1)},
                    Box{RatInterval{Rat(-1, 16), Rat(1, 16)},
                        RatInterval{Rat(15, 16), Rat(17, 16)}});
    CHECK_THROWS_AS(demo_scalar_extraction(gauss.from_rational(Rat(1, 3)), 10, 1),
                    std::domain_error);
}

TEST_CASE("stochastic correlation separates the two cases") {
    DemoResult corr = demo_stochastic_correlation(Oracle::all_ones(), 4, 10000, 31);
    CHECK(corr.matches_oracle);
    CHECK(corr.recovered.front().bit == 1);
    CHECK(corr.extra.front().second == "1");  // agreement exactly 1.0

    DemoResult indep = demo_stochastic_correlation(Oracle::all_zeros(), 4, 10000, 31);
    CHECK(indep.matches_oracle);
    CHECK(indep.recovered.front().bit == 0);

    // determinism
    DemoResult again = demo_stochastic_correlation(Oracle::all_zeros(), 4, 10000, 31);
    CHECK(again.extra == indep.extra);
}
