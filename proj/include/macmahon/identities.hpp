#pragma once

#include <cstdint>
#include <vector>

#include "macmahon/divisor_family.hpp"
#include "macmahon/report.hpp"
#include "macmahon/series.hpp"

namespace macmahon {

/// Chebyshev polynomial of the first kind, exact integer coefficients via
/// the recurrence T_0 = 1, T_1 = x, T_{j+1} = 2x T_j - T_{j-1}.
struct ChebPoly {
    std::int64_t degree;
    std::vector<Integer> coeffs;  // coefficient of x^j at index j
};

ChebPoly chebyshev(std::int64_t j);

/// Evaluate at a rational point.
Rational cheb_eval(const ChebPoly& p, const Rational& x);

/// T_j(x/2) as a BiSeries polynomial with x-powers in the z-slot.
BiSeries cheb_half_poly(std::int64_t j, const Rational& order);

VerifyReport verify_thm1_odd(const Rational& order);
VerifyReport verify_thm1_even(const Rational& order);

/// (q^2;q^2)(q;q^2)^2 == (q;q)/(-q;q).
VerifyReport verify_product_remark(const Rational& order);

/// Generating polynomial in x, substituted to z, against the product of
/// phase-reduced theta quotients.
VerifyReport verify_thm2(const ResidueSet& spec, const Rational& order);

/// B-family version with unsigned thetas; the n-in-S case carries the exact
/// (z^{1/2} + z^{-1/2})/2 prefactor on the left.
VerifyReport verify_thm3(const ResidueSet& spec, const Rational& order);

/// RHS of the A-identity: the product of signed theta quotients (times the
/// eta^3 factor when n is in S). Exposed for the decomposition two-path
/// check. `order` is the comparison order; internally computed with
/// headroom so the result is exact to at least `order`.
BiSeries theta_quotient_product_A(const ResidueSet& spec, const Rational& order);

/// Same with unsigned thetas (B-identity / combined T-functions; when n is
/// in S the full set including l = n enters numerator and denominator).
BiSeries theta_quotient_product_B(const ResidueSet& spec, const Rational& order);

}  // namespace macmahon
