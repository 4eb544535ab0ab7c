#pragma once

#include <cstdint>

#include "macmahon/report.hpp"
#include "macmahon/series.hpp"

namespace macmahon {

/// Characteristic reduced mod 1 into (-1/2, 1/2].
Rational normalize_characteristic(const Rational& r);

/// alpha(n, l) = l/n - 1/2.
Rational alpha(std::int64_t n, std::int64_t l);

/// Lattice sum over j in Z of s_j * q^{scale*(j+r)^2/2} * z^{j+r}, where
/// s_j = (-1)^j for the signed (phase-reduced) family and 1 otherwise.
/// The characteristic is normalized into (-1/2, 1/2] first.
BiSeries theta_series(const Rational& r, std::int64_t scale, bool is_signed,
                      const Rational& order);

/// The t-th z-derivative of theta_series evaluated at z = 1:
/// sum_j s_j * (j+r)^t * q^{scale*(j+r)^2/2}.
UniSeries theta_value_series(const Rational& r, std::int64_t scale, bool is_signed,
                             std::uint64_t t, const Rational& order);

/// q^{scale/24} * prod_{m>=1} (1 - q^{scale*m}).
UniSeries eta(std::int64_t scale, const Rational& order);

/// Triple-product check: lattice sum vs the product form, both built
/// independently, compared to `order`.
VerifyReport verify_jtp(const Rational& r, const Rational& order);

/// dz(dz(theta)) == (2/scale) * dq(theta).
VerifyReport verify_heat(const Rational& r, std::int64_t scale, const Rational& order);

/// eta(q)^3 against the signed first-derivative theta value series.
VerifyReport verify_eta_cubed(const Rational& order);

}  // namespace macmahon
