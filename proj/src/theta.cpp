#include "macmahon/theta.hpp"

namespace macmahon {

Rational normalize_characteristic(const Rational& r) {
    // r - ceil(r - 1/2) lands in (-1/2, 1/2]
    Rational s = r - make_rational(1, 2);
    Integer k;
    mpz_cdiv_q(k.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
    return r - Rational(k);
}

Rational alpha(std::int64_t n, std::int64_t l) {
    return make_rational(l, n) - make_rational(1, 2);
}

BiSeries theta_series(const Rational& r, std::int64_t scale, bool is_signed,
                      const Rational& order) {
    Rational r0 = normalize_characteristic(r);
    std::int64_t dr = r0.get_den().get_si();
    std::int64_t nr = r0.get_num().get_si();
    std::int64_t qden = 2 * dr * dr;
    BiSeries::TermMap t;
    // scaled q-exponent of index j: scale * (j*dr + nr)^2 over qden
    auto emit = [&](std::int64_t j) {
        std::int64_t m = j * dr + nr;
        std::int64_t sq = scale * m * m;
        if (make_rational(sq, qden) >= order) return false;
        Rational c((is_signed && (j % 2 != 0)) ? -1 : 1);
        auto [it, inserted] = t.emplace(BiSeries::Key{sq, m}, c);
        if (!inserted) it->second += c;
        return true;
    };
    for (std::int64_t j = 0; emit(j); ++j) {}
    for (std::int64_t j = -1; emit(j); --j) {}
    return BiSeries(qden, dr, order, std::move(t));
}

UniSeries theta_value_series(const Rational& r, std::int64_t scale, bool is_signed,
                             std::uint64_t t, const Rational& order) {
    Rational r0 = normalize_characteristic(r);
    std::int64_t dr = r0.get_den().get_si();
    std::int64_t nr = r0.get_num().get_si();
    std::int64_t qden = 2 * dr * dr;
    BiSeries::TermMap terms;
    auto emit = [&](std::int64_t j) {
        std::int64_t m = j * dr + nr;
        std::int64_t sq = scale * m * m;
        if (make_rational(sq, qden) >= order) return false;
        Rational c = rational_pow(make_rational(m, dr), t);
        if (is_signed && (j % 2 != 0)) c = -c;
        auto [it, inserted] = terms.emplace(BiSeries::Key{sq, 0}, c);
        if (!inserted) it->second += c;
        return true;
    };
    for (std::int64_t j = 0; emit(j); ++j) {}
    for (std::int64_t j = -1; emit(j); --j) {}
    return BiSeries(qden, 1, order, std::move(terms));
}

UniSeries eta(std::int64_t scale, const Rational& order) {
    Rational lead = make_rational(scale, 24);
    UniSeries prod = pochhammer(-1, scale, scale, order - lead);
    return shift(prod, lead, 0);
}

VerifyReport verify_jtp(const Rational& r, const Rational& order) {
    Rational r0 = normalize_characteristic(r);
    BiSeries lhs = theta_series(r0, 1, /*is_signed=*/false, order);

    BiSeries one = BiSeries::monomial(1, 0, 0, order);
    BiSeries rhs;
    if (r0 == make_rational(1, 2)) {
        // (z^{1/2} + z^{-1/2}) q^{1/8} prod (1-q^m)(1+zq^m)(1+z^{-1}q^m)
        BiSeries prod = one;
        for (Rational m = 1; m < order; m += 1) {
            prod = mul_trunc(prod, sub(one, BiSeries::monomial(1, m, 0, order)), order);
            prod = mul_trunc(prod, add(one, BiSeries::monomial(1, m, 1, order)), order);
            prod = mul_trunc(prod, add(one, BiSeries::monomial(1, m, -1, order)), order);
        }
        BiSeries pre = add(BiSeries::monomial(1, 0, make_rational(1, 2), order),
                           BiSeries::monomial(1, 0, make_rational(-1, 2), order));
        rhs = shift(mul_trunc(pre, prod, order), make_rational(1, 8), 0);
    } else {
        // z^r q^{r^2/2} prod (1-q^m)(1+zq^{m+r-1/2})(1+z^{-1}q^{m-r-1/2})
        BiSeries prod = one;
        Rational half = make_rational(1, 2);
        for (Rational m = 1; m < order + half + abs(r0); m += 1) {
            prod = mul_trunc(prod, sub(one, BiSeries::monomial(1, m, 0, order)), order);
            prod = mul_trunc(prod, add(one, BiSeries::monomial(1, m + r0 - half, 1, order)),
                             order);
            prod = mul_trunc(prod, add(one, BiSeries::monomial(1, m - r0 - half, -1, order)),
                             order);
        }
        rhs = shift(prod, r0 * r0 / 2, r0);
    }
    return VerifyReport{"jtp", "r=" + rational_str(r0), order, equal_up_to(lhs, rhs, order)};
}

VerifyReport verify_heat(const Rational& r, std::int64_t scale, const Rational& order) {
    BiSeries theta = theta_series(r, scale, /*is_signed=*/true, order);
    BiSeries lhs = dz(dz(theta));
    BiSeries rhs = macmahon::scale(make_rational(2, scale), dq(theta));
    return VerifyReport{"heat", "r=" + rational_str(r) + " scale=" + std::to_string(scale),
                        order, equal_up_to(lhs, rhs, order)};
}

VerifyReport verify_eta_cubed(const Rational& order) {
    UniSeries lhs = int_pow(eta(1, order), 3);
    UniSeries rhs = theta_value_series(make_rational(1, 2), 1, /*is_signed=*/true, 1, order);
    return VerifyReport{"eta3", "", order, equal_up_to(lhs, rhs, order)};
}

}  // namespace macmahon
