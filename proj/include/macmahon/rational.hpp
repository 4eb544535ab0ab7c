#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace macmahon {

using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class does not canonicalize on construction; always go through here
// when building from a numerator/denominator pair.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

// Parses "num", "num/den" or "-num/den".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return make_rational(Integer(s), 1);
    return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

// "num" when integral, "num/den" otherwise.
inline std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Integer binomial(std::uint64_t n, std::uint64_t k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline Rational rational_pow(const Rational& base, std::uint64_t e) {
    Rational out = 1;
    Rational b = base;
    while (e) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

inline Integer factorial(std::uint64_t n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

}  // namespace macmahon
