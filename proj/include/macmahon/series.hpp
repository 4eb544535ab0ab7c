#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "macmahon/errors.hpp"
#include "macmahon/rational.hpp"

namespace macmahon {

/// Truncated bivariate formal series in q and z with exact rational
/// coefficients. Exponents of q live in (1/qden)*Z and exponents of z in
/// (1/zden)*Z; a term is stored only when its q-exponent is strictly below
/// `order`. No zero coefficients are ever stored, so the zero series is the
/// one with an empty term map. Values are immutable once built; every
/// operation returns a fresh series.
class BiSeries {
  public:
    // (scaled q-exponent, scaled z-exponent) -> coefficient, ascending
    using Key = std::pair<std::int64_t, std::int64_t>;
    using TermMap = std::map<Key, Rational>;

    BiSeries() : order_(0) {}
    BiSeries(std::int64_t qden, std::int64_t zden, Rational order, TermMap terms);

    static BiSeries zero(const Rational& order);
    /// c * q^qexp * z^zexp, dropped if qexp >= order.
    static BiSeries monomial(const Rational& c, const Rational& qexp, const Rational& zexp,
                             const Rational& order);

    std::int64_t qden() const { return qden_; }
    std::int64_t zden() const { return zden_; }
    const Rational& order() const { return order_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_univariate() const;

    /// Minimum q-exponent; empty for the zero series.
    std::optional<Rational> min_qexp() const;

    Rational qexp_of(const Key& k) const { return make_rational(k.first, qden_); }
    Rational zexp_of(const Key& k) const { return make_rational(k.second, zden_); }

    /// Coefficient of q^qexp z^zexp; 0 for absent terms, OrderExceeded if
    /// qexp is at or beyond the truncation order.
    Rational coeff(const Rational& qexp, const Rational& zexp) const;

    /// Same series re-expressed over exponent denominators that are
    /// multiples of the current ones.
    BiSeries with_denominators(std::int64_t qd, std::int64_t zd) const;

    /// Copy truncated to a (not larger) order.
    BiSeries truncated(const Rational& order) const;

    friend bool operator==(const BiSeries&, const BiSeries&) = default;

  private:
    std::int64_t qden_ = 1;
    std::int64_t zden_ = 1;
    Rational order_;
    TermMap terms_;
};

/// One-variable q-series: a BiSeries whose terms all have z-exponent 0.
using UniSeries = BiSeries;

BiSeries add(const BiSeries& a, const BiSeries& b);
BiSeries sub(const BiSeries& a, const BiSeries& b);
BiSeries negate(const BiSeries& a);
BiSeries scale(const Rational& c, const BiSeries& a);

/// Convolution product. Result order follows the truncation contract
/// min(a.order + minq(b), b.order + minq(a)), so every retained coefficient
/// is exact.
BiSeries mul(const BiSeries& a, const BiSeries& b);

/// Product truncated at an explicit order. Exact whenever both factors are
/// known below `order` and have non-negative minimum q-exponent (after the
/// obvious shift bookkeeping by the caller).
BiSeries mul_trunc(const BiSeries& a, const BiSeries& b, const Rational& order);

/// Multiplicative inverse. Requires the lowest q-layer of `a` to be a single
/// monomial c q^e z^f; the result has order a.order - 2e and may carry
/// negative exponents.
BiSeries invert(const BiSeries& a);

BiSeries int_pow(const BiSeries& a, std::uint64_t e);

/// q d/dq and z d/dz.
BiSeries dq(const BiSeries& a);
BiSeries dz(const BiSeries& a);

/// Substitute z = 1: collapse each q-level to the sum of its z-coefficients.
UniSeries eval_z1(const BiSeries& a);

/// Multiply every exponent pair by (dq_shift, dz_shift); order shifts along.
BiSeries shift(const BiSeries& a, const Rational& q_shift, const Rational& z_shift);

/// Reinterpret the z-slot as powers of x = z^{1/2} - z^{-1/2} and expand.
/// Input must have zden = 1 and non-negative z-exponents.
BiSeries subst_x_to_z(const BiSeries& a);

/// Truncated product of (1 + coef_sign * q^{a_qexp + m*step}) over m >= 0.
UniSeries pochhammer(int coef_sign, const Rational& a_qexp, const Rational& step,
                     const Rational& order);

struct Mismatch {
    Rational qexp;
    Rational zexp;
    Rational lhs;
    Rational rhs;
};

/// PASS (nullopt) or the first differing term, comparing all terms with
/// q-exponent strictly below `order`. Throws OrderExceeded if either operand
/// is not known that far.
std::optional<Mismatch> equal_up_to(const BiSeries& a, const BiSeries& b, const Rational& order);

std::string to_json_string(const BiSeries& s);
BiSeries biseries_from_json_string(const std::string& text);

}  // namespace macmahon
