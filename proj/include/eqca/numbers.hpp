#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace eqca {

// Arbitrary-precision integers and rationals. Fixed-width integers are not
// used for any index or coefficient: sequence indices grow super-exponentially
// with sequence length, so every Nat must be a bignum.
using Int = mpz_class;
using Nat = mpz_class;  // by convention non-negative; checked at API edges
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rat parse_rat(const std::string& s);

/// Formats a canonical rational as "p" (unit denominator) or "p/q".
std::string format_rat(const Rat& r);

/// Decimal digit count of a non-negative integer (0 has one digit).
std::size_t decimal_digits(const Nat& n);

inline void require_nat(const Nat& n, const char* what) {
    if (n < 0) throw std::domain_error(std::string(what) + ": negative value");
}

/// Checked narrowing for loop bounds and array sizes.
std::size_t to_size(const Nat& n, std::size_t limit, const char* what);

}  // namespace eqca
