#include "eqca/numbers.hpp"

namespace eqca {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int p(s);
            return Rat(p);
        }
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        return make_rat(p, q);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: \"" + s + "\"");
    }
}

std::string format_rat(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::size_t decimal_digits(const Nat& n) {
    require_nat(n, "decimal_digits");
    if (n == 0) return 1;
    // mpz_sizeinbase may overestimate by one for non-power-of-two bases.
    std::size_t size = mpz_sizeinbase(n.get_mpz_t(), 10);
    if (size > 1) {
        Nat low;
        mpz_ui_pow_ui(low.get_mpz_t(), 10, static_cast<unsigned long>(size - 1));
        if (n < low) --size;
    }
    return size;
}

std::size_t to_size(const Nat& n, std::size_t limit, const char* what) {
    require_nat(n, what);
    if (!n.fits_ulong_p() || n.get_ui() > limit)
        throw std::invalid_argument(std::string(what) + ": value exceeds supported size");
    return static_cast<std::size_t>(n.get_ui());
}

}  // namespace eqca
