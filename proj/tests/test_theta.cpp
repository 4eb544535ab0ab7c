#include <doctest.h>

#include "macmahon/theta.hpp"

using namespace macmahon;

namespace {
Rational rat(long n, long d = 1) { return make_rational(n, d); }
}

TEST_CASE("characteristic normalization") {
    CHECK(normalize_characteristic(rat(1, 2)) == rat(1, 2));
    CHECK(normalize_characteristic(rat(3, 2)) == rat(1, 2));
    CHECK(normalize_characteristic(rat(-1, 2)) == rat(1, 2));
    CHECK(normalize_characteristic(rat(5, 6)) == rat(-1, 6));
    CHECK(normalize_characteristic(rat(0)) == rat(0));
    CHECK(alpha(3, 1) == rat(-1, 6));
    CHECK(alpha(3, 2) == rat(1, 6));
}

TEST_CASE("theta_series lattice enumeration") {
    BiSeries t = theta_series(rat(1, 2), 1, true, 2);
    // j = 0, -1, 1, -2 give exponents 1/8, 1/8, 9/8, 9/8
    CHECK(t.coeff(rat(1, 8), rat(1, 2)) == 1);
    CHECK(t.coeff(rat(1, 8), rat(-1, 2)) == -1);
    CHECK(t.coeff(rat(9, 8), rat(3, 2)) == -1);
    CHECK(t.coeff(rat(9, 8), rat(-3, 2)) == 1);
    CHECK(t.terms().size() == 4);

    BiSeries u = theta_series(rat(-1, 6), 3, true, 2);
    CHECK(u.min_qexp() == rat(1, 24));
    CHECK(u.coeff(rat(1, 24), rat(-1, 6)) == 1);

    CHECK(theta_series(rat(1, 4), 2, true, 0).is_zero());
}

TEST_CASE("theta_value_series") {
    // eta^3 pattern: q^{1/8}(1 - 3q + 5q^3 - 7q^6 + ...)
    UniSeries v = theta_value_series(rat(1, 2), 1, true, 1, 10);
    CHECK(v.coeff(rat(1, 8), 0) == 1);
    CHECK(v.coeff(rat(1, 8) + 1, 0) == -3);
    CHECK(v.coeff(rat(1, 8) + 3, 0) == 5);
    CHECK(v.coeff(rat(1, 8) + 6, 0) == -7);

    // odd summand cancels pairwise for even t
    CHECK(theta_value_series(rat(1, 2), 1, true, 0, 10).is_zero());
    CHECK(theta_value_series(rat(1, 2), 1, true, 2, 30).is_zero());

    UniSeries w = theta_value_series(rat(-1, 6), 3, true, 0, 5);
    CHECK(w.coeff(rat(1, 24), 0) == 1);
    CHECK(w.coeff(rat(1, 24) + 1, 0) == -1);
    CHECK(w.coeff(rat(1, 24) + 2, 0) == -1);
}

TEST_CASE("value series equals dz^t of the bivariate series at z=1") {
    for (auto [r, scale] : {std::pair{rat(1, 2), 1L}, {rat(-1, 6), 3L}, {rat(1, 4), 2L}}) {
        for (bool is_signed : {true, false}) {
            for (std::uint64_t t = 0; t <= 3; ++t) {
                BiSeries th = theta_series(r, scale, is_signed, 15);
                for (std::uint64_t i = 0; i < t; ++i) th = dz(th);
                UniSeries direct = theta_value_series(r, scale, is_signed, t, 15);
                CHECK(!equal_up_to(eval_z1(th), direct, 15));
            }
        }
    }
}

TEST_CASE("eta expansions") {
    UniSeries e = eta(1, 10);
    CHECK(e.coeff(rat(1, 24), 0) == 1);
    CHECK(e.coeff(rat(1, 24) + 1, 0) == -1);
    CHECK(e.coeff(rat(1, 24) + 2, 0) == -1);
    CHECK(e.coeff(rat(1, 24) + 5, 0) == 1);
    CHECK(e.coeff(rat(1, 24) + 7, 0) == 1);

    UniSeries e2 = eta(2, 4);
    CHECK(e2.coeff(rat(1, 12), 0) == 1);
    CHECK(e2.coeff(rat(1, 12) + 2, 0) == -1);
}

TEST_CASE("jacobi triple product") {
    CHECK(verify_jtp(rat(1, 6), 10).pass());
    CHECK(verify_jtp(rat(1, 2), 10).pass());
    CHECK(verify_jtp(rat(-1, 6), 12).pass());
    CHECK(verify_jtp(rat(1, 4), 0).pass());  // vacuous window
    CHECK(verify_jtp(rat(0), 10).pass());
}

TEST_CASE("heat equation") {
    CHECK(verify_heat(rat(1, 2), 1, 20).pass());
    CHECK(verify_heat(rat(-1, 6), 3, 20).pass());
    CHECK(verify_heat(rat(1, 3), 5, 20).pass());
}

TEST_CASE("eta cubed identity") {
    CHECK(verify_eta_cubed(30).pass());
    CHECK(verify_eta_cubed(1).pass());
    CHECK(verify_eta_cubed(0).pass());
}
