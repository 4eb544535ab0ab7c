#include "macmahon/identities.hpp"

#include "macmahon/theta.hpp"

namespace macmahon {

ChebPoly chebyshev(std::int64_t j) {
    if (j < 0) throw SeriesError("chebyshev: negative index");
    std::vector<Integer> prev{1};          // T_0
    if (j == 0) return ChebPoly{0, prev};
    std::vector<Integer> cur{0, 1};        // T_1
    for (std::int64_t d = 1; d < j; ++d) {
        std::vector<Integer> next(cur.size() + 1, Integer(0));
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = 2 * cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return ChebPoly{j, std::move(cur)};
}

Rational cheb_eval(const ChebPoly& p, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = p.coeffs.size(); i-- > 0;) acc = acc * x + Rational(p.coeffs[i]);
    return acc;
}

BiSeries cheb_half_poly(std::int64_t j, const Rational& order) {
    ChebPoly p = chebyshev(j);
    BiSeries::TermMap t;
    for (std::size_t d = 0; d < p.coeffs.size(); ++d) {
        if (p.coeffs[d] == 0) continue;
        t[{0, static_cast<std::int64_t>(d)}] =
            Rational(p.coeffs[d]) / rational_pow(2, d);
    }
    return BiSeries(1, 1, order, std::move(t));
}

namespace {

/// sum_k entries[k] x^{2k + x_offset}, x-powers in the z-slot.
BiSeries assemble_x_poly(const std::vector<UniSeries>& entries, std::int64_t x_offset,
                         const Rational& order, bool alternate = false) {
    BiSeries out = BiSeries::zero(order);
    for (std::size_t k = 0; k < entries.size(); ++k) {
        BiSeries term = shift(entries[k], 0, Rational(2 * static_cast<std::int64_t>(k) +
                                                      x_offset));
        if (alternate && k % 2 == 1) term = negate(term);
        out = add(out, term.truncated(order));
    }
    return out;
}

}  // namespace

VerifyReport verify_thm1_odd(const Rational& order) {
    BiSeries lhs = BiSeries::zero(order);
    for (std::int64_t i = 0; Rational(i * (i + 1) / 2) < order; ++i) {
        BiSeries term = shift(cheb_half_poly(2 * i + 1, order), Rational(i * (i + 1) / 2), 0);
        lhs = add(lhs, term.truncated(order));
    }
    lhs = macmahon::scale(2, lhs);

    SeriesFamily fam = family(validate(1, {1}), Kind::A, kmax_auto, order);
    UniSeries poch3 = int_pow(pochhammer(-1, 1, 1, order), 3).truncated(order);
    BiSeries rhs = mul_trunc(poch3, assemble_x_poly(fam.entries, 1, order), order);
    return VerifyReport{"thm1-odd", "", order, equal_up_to(lhs, rhs, order)};
}

VerifyReport verify_thm1_even(const Rational& order) {
    BiSeries lhs = BiSeries::monomial(1, 0, 0, order);
    for (std::int64_t i = 1; Rational(i * i) < order; ++i) {
        BiSeries term = shift(cheb_half_poly(2 * i, order), Rational(i * i), 0);
        lhs = add(lhs, macmahon::scale(2, term.truncated(order)));
    }

    SeriesFamily fam = family(validate(2, {1}), Kind::A, kmax_auto, order);
    UniSeries prod = mul_trunc(pochhammer(-1, 2, 2, order),
                               int_pow(pochhammer(-1, 1, 2, order), 2).truncated(order), order);
    BiSeries rhs = mul_trunc(prod, assemble_x_poly(fam.entries, 0, order), order);
    return VerifyReport{"thm1-even", "", order, equal_up_to(lhs, rhs, order)};
}

VerifyReport verify_product_remark(const Rational& order) {
    UniSeries lhs = mul_trunc(pochhammer(-1, 2, 2, order),
                              int_pow(pochhammer(-1, 1, 2, order), 2).truncated(order), order);
    UniSeries rhs =
        mul_trunc(pochhammer(-1, 1, 1, order), invert(pochhammer(1, 1, 1, order)), order);
    return VerifyReport{"product-remark", "", order, equal_up_to(lhs, rhs, order)};
}

BiSeries theta_quotient_product_A(const ResidueSet& spec, const Rational& order) {
    std::int64_t n = spec.n;
    bool with_n = spec.contains_n();
    // headroom: the denominator's leading q-exponent is lost on inversion
    Rational lead = with_n ? make_rational(n, 8) : Rational(0);
    for (std::int64_t l : spec.elems) {
        if (l == n) continue;
        Rational a = alpha(n, l);
        lead += Rational(n) * a * a / 2;
    }
    Rational w = order + lead;

    BiSeries num = BiSeries::monomial(1, 0, 0, w);
    UniSeries den = BiSeries::monomial(1, 0, 0, w);
    for (std::int64_t l : spec.elems) {
        if (l == n) continue;
        Rational a = alpha(n, l);
        num = mul_trunc(num, theta_series(a, n, true, w), w);
        den = mul_trunc(den, theta_value_series(a, n, true, 0, w), w);
    }
    if (with_n) {
        num = mul_trunc(num, theta_series(make_rational(1, 2), n, true, w), w);
        den = mul_trunc(den, int_pow(eta(n, w), 3).truncated(w), w);
    }
    return mul(num, invert(den));
}

BiSeries theta_quotient_product_B(const ResidueSet& spec, const Rational& order) {
    std::int64_t n = spec.n;
    Rational lead = 0;
    for (std::int64_t l : spec.elems) {
        Rational a = alpha(n, l);
        lead += Rational(n) * a * a / 2;
    }
    Rational w = order + lead;

    BiSeries num = BiSeries::monomial(1, 0, 0, w);
    UniSeries den = BiSeries::monomial(1, 0, 0, w);
    for (std::int64_t l : spec.elems) {
        Rational a = alpha(n, l);
        num = mul_trunc(num, theta_series(a, n, false, w), w);
        den = mul_trunc(den, theta_value_series(a, n, false, 0, w), w);
    }
    return mul(num, invert(den));
}

VerifyReport verify_thm2(const ResidueSet& spec, const Rational& order) {
    BiSeries gp = gen_poly(spec, order);
    if (spec.contains_n()) gp = shift(gp, 0, 1).truncated(order);  // odd x-powers
    BiSeries lhs = subst_x_to_z(gp);
    BiSeries rhs = theta_quotient_product_A(spec, order);
    std::string detail = "n=" + std::to_string(spec.n);
    return VerifyReport{"thm2", detail, order, equal_up_to(lhs, rhs, order)};
}

VerifyReport verify_thm3(const ResidueSet& spec, const Rational& order) {
    SeriesFamily fam = family(spec, Kind::B, kmax_auto, order);
    BiSeries lhs = subst_x_to_z(assemble_x_poly(fam.entries, 0, order));
    if (spec.contains_n()) {
        // sqrt(1 + (x/2)^2) = (z^{1/2} + z^{-1/2})/2 exactly
        BiSeries pre = add(BiSeries::monomial(make_rational(1, 2), 0, make_rational(1, 2), order),
                           BiSeries::monomial(make_rational(1, 2), 0, make_rational(-1, 2), order));
        lhs = mul_trunc(lhs, pre, order);
    }
    BiSeries rhs = theta_quotient_product_B(spec, order);
    std::string detail = "n=" + std::to_string(spec.n);
    return VerifyReport{"thm3", detail, order, equal_up_to(lhs, rhs, order)};
}

}  // namespace macmahon
