#include <doctest.h>

#include "macmahon/divisor_family.hpp"
#include "macmahon/theta.hpp"

using namespace macmahon;

namespace {
Rational rat(long n, long d = 1) { return make_rational(n, d); }
}

TEST_CASE("validate") {
    ResidueSet g = validate(5, {2, 3});
    CHECK(!g.contains_n());
    CHECK(g.admits(2));
    CHECK(g.admits(7));
    CHECK(!g.admits(5));

    ResidueSet c = validate(2, {1});
    CHECK(!c.contains_n());
    CHECK(c.admits(1));
    CHECK(c.admits(3));
    CHECK(!c.admits(2));

    CHECK(validate(1, {1}).contains_n());
    CHECK_THROWS_AS(validate(5, {1, 2}), NotSymmetric);
    CHECK_THROWS_AS(validate(5, {0, 5}), NotInRange);
    CHECK_THROWS_AS(validate(5, {6}), NotInRange);
    CHECK_THROWS_AS(validate(3, {1, 1, 2}), Duplicate);
}

TEST_CASE("t_series") {
    UniSeries a = t_series(1, Kind::A, 6);
    for (long s = 1; s <= 5; ++s) CHECK(a.coeff(s, 0) == s);

    UniSeries a2 = t_series(2, Kind::A, 7);
    CHECK(a2.coeff(2, 0) == 1);
    CHECK(a2.coeff(4, 0) == 2);
    CHECK(a2.coeff(6, 0) == 3);
    CHECK(a2.coeff(3, 0) == 0);

    UniSeries b = t_series(1, Kind::B, 5);
    CHECK(b.coeff(1, 0) == 1);
    CHECK(b.coeff(2, 0) == -2);
    CHECK(b.coeff(3, 0) == 3);
    CHECK(b.coeff(4, 0) == -4);
}

TEST_CASE("family matches appendix rows") {
    SeriesFamily f = family(validate(3, {1, 2}), Kind::A, 2, 16);
    long k1[] = {1, 3, 3, 7, 6, 9};
    for (long m = 1; m <= 6; ++m) CHECK(f.entries[1].coeff(m, 0) == k1[m - 1]);

    SeriesFamily g = family(validate(4, {1, 3}), Kind::A, 2, 16);
    CHECK(g.entries[2].coeff(4, 0) == 1);
    CHECK(g.entries[2].coeff(5, 0) == 2);
    CHECK(g.entries[2].coeff(6, 0) == 4);

    CHECK(family(validate(5, {2, 3}), Kind::A, 0, 10).entries[0].coeff(0, 0) == 1);
}

TEST_CASE("coefficient oracle") {
    CHECK(coefficient_oracle(validate(3, {1, 2}), Kind::A, 1, 4) == 7);
    CHECK(coefficient_oracle(validate(5, {2, 3}), Kind::A, 1, 5) == 0);
    CHECK(coefficient_oracle(validate(6, {1, 5}), Kind::A, 3, 13) == 1);
}

TEST_CASE("three-way agreement: oracle, DP, product extraction") {
    for (auto [n, elems] : std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>>{
             {1, {1}}, {3, {1, 2}}, {2, {1, 2}}, {5, {2, 3}}}) {
        ResidueSet spec = validate(n, elems);
        for (Kind kind : {Kind::A, Kind::B}) {
            SeriesFamily fam = family(spec, kind, 3, 16);
            BiSeries gp = gen_poly(spec, 16);
            for (std::int64_t k = 1; k <= 3; ++k) {
                for (std::int64_t m = 1; m <= 15; ++m) {
                    Rational dp = fam.entries[k].coeff(m, 0);
                    CHECK(coefficient_oracle(spec, kind, k, m) == dp);
                    if (kind == Kind::A) {
                        Rational sign((k % 2) ? -1 : 1);
                        CHECK(gp.coeff(m, 2 * k) == sign * dp);
                    }
                }
            }
        }
    }
}

TEST_CASE("sigma specialization") {
    SeriesFamily f = family(validate(1, {1}), Kind::A, 1, 51);
    for (std::int64_t m = 1; m <= 50; ++m) {
        std::int64_t sigma = 0;
        for (std::int64_t d = 1; d <= m; ++d)
            if (m % d == 0) sigma += d;
        CHECK(f.entries[1].coeff(m, 0) == sigma);
    }
}

TEST_CASE("substitution and full-set laws") {
    Rational order = 40;
    SeriesFamily base = family(validate(1, {1}), Kind::A, 3, order);
    for (std::int64_t n = 2; n <= 4; ++n) {
        SeriesFamily sub = family(validate(n, {n}), Kind::A, 3, order);
        for (std::int64_t k = 0; k <= 3; ++k) {
            // q -> q^n on the base entry
            for (std::int64_t m = 0; Rational(m) < order; ++m) {
                Rational expect = (m % n == 0) ? base.entries[k].coeff(m / n, 0) : Rational(0);
                CHECK(sub.entries[k].coeff(m, 0) == expect);
            }
        }
    }
    for (std::int64_t n = 2; n <= 3; ++n) {
        std::vector<std::int64_t> all(n);
        for (std::int64_t i = 0; i < n; ++i) all[i] = i + 1;
        SeriesFamily full = family(validate(n, all), Kind::A, 3, order);
        for (std::int64_t k = 0; k <= 3; ++k)
            CHECK(!equal_up_to(full.entries[k], base.entries[k], order));
    }
}

TEST_CASE("vanishing below minimal tuple sum and integrality") {
    ResidueSet spec = validate(3, {1, 2});
    SeriesFamily fam = family(spec, Kind::A, 4, 20);
    // smallest admissible parts 1,2,4,5 -> minimal sums 1,3,7,12
    long min_sum[] = {0, 1, 3, 7, 12};
    for (long k = 1; k <= 4; ++k) {
        for (long m = 1; m < min_sum[k]; ++m) CHECK(fam.entries[k].coeff(m, 0) == 0);
        CHECK(fam.entries[k].coeff(min_sum[k], 0) == 1);
        for (const auto& [key, c] : fam.entries[k].terms()) {
            CHECK(c.get_den() == 1);
            CHECK(c >= 0);
        }
    }
    SeriesFamily famB = family(spec, Kind::B, 3, 20);
    for (long k = 1; k <= 3; ++k)
        for (const auto& [key, c] : famB.entries[k].terms()) CHECK(c.get_den() == 1);
}

TEST_CASE("kmax auto bound") {
    SeriesFamily fam = family(validate(1, {1}), Kind::A, kmax_auto, 16);
    // minimal sums 1,3,6,10,15 < 16; 21 >= 16
    CHECK(fam.entries.size() == 6);
    CHECK(!fam.entries[5].is_zero());
}

TEST_CASE("parity of the symmetric theta product") {
    // z <-> z^{-1} fixes the product when n is not in S and negates it otherwise
    for (auto [n, elems, odd] : std::vector<std::tuple<std::int64_t, std::vector<std::int64_t>, bool>>{
             {3, {1, 2}, false}, {4, {1, 3}, false}, {1, {1}, true}, {2, {1, 2}, true}}) {
        ResidueSet spec = validate(n, elems);
        Rational order = 8;
        BiSeries prod = BiSeries::monomial(1, 0, 0, order);
        for (std::int64_t l : spec.elems)
            prod = mul_trunc(prod, theta_series(alpha(n, l), n, true, order), order);
        // mirror: negate every z-exponent
        BiSeries::TermMap t;
        for (const auto& [k, c] : prod.terms()) t[{k.first, -k.second}] = c;
        BiSeries mirror(prod.qden(), prod.zden(), order, std::move(t));
        CHECK(!equal_up_to(odd ? negate(mirror) : mirror, prod, order));
        // total z-exponents in Z (even case) or Z + 1/2 (odd case)
        for (const auto& [k, c] : prod.terms()) {
            Rational ze = prod.zexp_of(k);
            CHECK((odd ? ze - rat(1, 2) : ze).get_den() == 1);
        }
    }
}
