#include "macmahon/series.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>

namespace macmahon {

namespace {

// qexp (scaled by qden) < order ?
bool below(std::int64_t sq, std::int64_t qden, const Rational& order) {
    return Rational(sq) < order * qden;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

// A rescaled zero operand canonicalizes its denominators back to 1, so the
// common denominators must travel alongside the rescaled pair.
struct Unified {
    std::int64_t qden;
    std::int64_t zden;
    BiSeries x;
    BiSeries y;
};

Unified unify(const BiSeries& a, const BiSeries& b) {
    std::int64_t qd = lcm64(a.qden(), b.qden());
    std::int64_t zd = lcm64(a.zden(), b.zden());
    return {qd, zd, a.with_denominators(qd, zd), b.with_denominators(qd, zd)};
}

}  // namespace

BiSeries::BiSeries(std::int64_t qden, std::int64_t zden, Rational order, TermMap terms)
    : qden_(qden), zden_(zden), order_(std::move(order)) {
    for (auto& [k, c] : terms) {
        if (c == 0) continue;
        if (!below(k.first, qden_, order_)) continue;
        terms_.emplace(k, std::move(c));
    }
    if (terms_.empty()) {
        qden_ = 1;
        zden_ = 1;
    }
}

BiSeries BiSeries::zero(const Rational& order) { return BiSeries(1, 1, order, {}); }

BiSeries BiSeries::monomial(const Rational& c, const Rational& qexp, const Rational& zexp,
                            const Rational& order) {
    std::int64_t qd = static_cast<std::int64_t>(qexp.get_den().get_si());
    std::int64_t zd = static_cast<std::int64_t>(zexp.get_den().get_si());
    TermMap t;
    t[{qexp.get_num().get_si(), zexp.get_num().get_si()}] = c;
    return BiSeries(qd, zd, order, std::move(t));
}

bool BiSeries::is_univariate() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return kv.first.second == 0; });
}

std::optional<Rational> BiSeries::min_qexp() const {
    if (terms_.empty()) return std::nullopt;
    return make_rational(terms_.begin()->first.first, qden_);
}

Rational BiSeries::coeff(const Rational& qexp, const Rational& zexp) const {
    if (qexp >= order_)
        throw OrderExceeded("coeff: q-exponent " + rational_str(qexp) +
                            " at or beyond truncation order " + rational_str(order_));
    Rational sq = qexp * qden_;
    Rational sz = zexp * zden_;
    if (sq.get_den() != 1 || sz.get_den() != 1) return 0;
    auto it = terms_.find({sq.get_num().get_si(), sz.get_num().get_si()});
    return it == terms_.end() ? Rational(0) : it->second;
}

BiSeries BiSeries::with_denominators(std::int64_t qd, std::int64_t zd) const {
    if (qd % qden_ != 0 || zd % zden_ != 0)
        throw SeriesError("with_denominators: not a multiple of current denominators");
    if (qd == qden_ && zd == zden_) return *this;
    std::int64_t qf = qd / qden_, zf = zd / zden_;
    TermMap t;
    for (const auto& [k, c] : terms_) t[{k.first * qf, k.second * zf}] = c;
    return BiSeries(qd, zd, order_, std::move(t));
}

BiSeries BiSeries::truncated(const Rational& order) const {
    return BiSeries(qden_, zden_, std::min(order, order_), terms_);
}

BiSeries add(const BiSeries& a, const BiSeries& b) {
    auto [qd, zd, x, y] = unify(a, b);
    Rational order = std::min(a.order(), b.order());
    BiSeries::TermMap t = x.terms();
    for (const auto& [k, c] : y.terms()) {
        auto [it, inserted] = t.emplace(k, c);
        if (!inserted) it->second += c;
    }
    return BiSeries(qd, zd, order, std::move(t));
}

BiSeries negate(const BiSeries& a) { return scale(-1, a); }

BiSeries sub(const BiSeries& a, const BiSeries& b) { return add(a, negate(b)); }

BiSeries scale(const Rational& c, const BiSeries& a) {
    if (c == 0) return BiSeries::zero(a.order());
    BiSeries::TermMap t;
    for (const auto& [k, v] : a.terms()) t[k] = c * v;
    return BiSeries(a.qden(), a.zden(), a.order(), std::move(t));
}

BiSeries mul_trunc(const BiSeries& a, const BiSeries& b, const Rational& order) {
    if (a.is_zero() || b.is_zero()) return BiSeries::zero(order);
    auto [qd, zd, x, y] = unify(a, b);
    // Scaled bound: keep sq with sq < order * qden.
    Rational bound = order * qd;
    BiSeries::TermMap t;
    for (const auto& [ka, ca] : x.terms()) {
        for (const auto& [kb, cb] : y.terms()) {
            std::int64_t sq = ka.first + kb.first;
            if (Rational(sq) >= bound) break;  // kb ascending in q
            auto key = BiSeries::Key{sq, ka.second + kb.second};
            auto [it, inserted] = t.emplace(key, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    return BiSeries(qd, zd, order, std::move(t));
}

BiSeries mul(const BiSeries& a, const BiSeries& b) {
    if (a.is_zero() || b.is_zero()) return BiSeries::zero(std::min(a.order(), b.order()));
    Rational order = std::min(a.order() + *b.min_qexp(), b.order() + *a.min_qexp());
    return mul_trunc(a, b, order);
}

BiSeries int_pow(const BiSeries& a, std::uint64_t e) {
    BiSeries out = BiSeries::monomial(1, 0, 0, a.order());
    BiSeries base = a;
    bool first = true;
    while (e) {
        if (e & 1) {
            out = first ? base : mul(out, base);
            first = false;
        }
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return out;
}

BiSeries dq(const BiSeries& a) {
    BiSeries::TermMap t;
    for (const auto& [k, c] : a.terms()) t[k] = c * make_rational(k.first, a.qden());
    return BiSeries(a.qden(), a.zden(), a.order(), std::move(t));
}

BiSeries dz(const BiSeries& a) {
    BiSeries::TermMap t;
    for (const auto& [k, c] : a.terms()) t[k] = c * make_rational(k.second, a.zden());
    return BiSeries(a.qden(), a.zden(), a.order(), std::move(t));
}

UniSeries eval_z1(const BiSeries& a) {
    BiSeries::TermMap t;
    for (const auto& [k, c] : a.terms()) {
        auto [it, inserted] = t.emplace(BiSeries::Key{k.first, 0}, c);
        if (!inserted) it->second += c;
    }
    return BiSeries(a.qden(), 1, a.order(), std::move(t));
}

BiSeries shift(const BiSeries& a, const Rational& q_shift, const Rational& z_shift) {
    std::int64_t qd = lcm64(a.qden(), q_shift.get_den().get_si());
    std::int64_t zd = lcm64(a.zden(), z_shift.get_den().get_si());
    BiSeries x = a.with_denominators(qd, zd);
    std::int64_t dsq = Rational(q_shift * qd).get_num().get_si();
    std::int64_t dsz = Rational(z_shift * zd).get_num().get_si();
    BiSeries::TermMap t;
    for (const auto& [k, c] : x.terms()) t[{k.first + dsq, k.second + dsz}] = c;
    return BiSeries(qd, zd, a.order() + q_shift, std::move(t));
}

BiSeries invert(const BiSeries& a) {
    if (a.is_zero()) throw ZeroSeries();
    auto lead = a.terms().begin();
    std::int64_t lead_sq = lead->first.first;
    auto next = std::next(lead);
    if (next != a.terms().end() && next->first.first == lead_sq) throw AmbiguousLeadingTerm();

    Rational e = a.qexp_of(lead->first);
    Rational f = a.zexp_of(lead->first);
    Rational c = lead->second;

    // u = a / (c q^e z^f) is a unit series 1 + v with minq(v) > 0.
    BiSeries u = scale(1 / c, shift(a, -e, -f));
    Rational unit_order = a.order() - e;
    BiSeries one = BiSeries::monomial(1, 0, 0, unit_order);
    BiSeries w = negate(sub(u, one));  // w = 1 - u = -v

    BiSeries acc = one;
    BiSeries term = one;
    while (true) {
        term = mul_trunc(term, w, unit_order);
        if (term.is_zero()) break;
        acc = add(acc, term);
    }
    BiSeries inv = scale(1 / c, shift(acc, -e, -f));
    return inv.truncated(a.order() - 2 * e);
}

BiSeries subst_x_to_z(const BiSeries& a) {
    if (a.zden() != 1) throw UnboundedXDegree();
    BiSeries::TermMap t;
    for (const auto& [k, c] : a.terms()) {
        std::int64_t j = k.second;
        if (j < 0) throw UnboundedXDegree();
        // x^j = sum_i binom(j,i) (-1)^i z^{(j-2i)/2}, scaled z-exponent j-2i over zden 2
        for (std::int64_t i = 0; i <= j; ++i) {
            Rational coef = c * binomial(j, i) * ((i % 2) ? -1 : 1);
            auto key = BiSeries::Key{k.first, j - 2 * i};
            auto [it, inserted] = t.emplace(key, coef);
            if (!inserted) it->second += coef;
        }
    }
    return BiSeries(a.qden(), 2, a.order(), std::move(t));
}

UniSeries pochhammer(int coef_sign, const Rational& a_qexp, const Rational& step,
                     const Rational& order) {
    if (a_qexp <= 0) throw DivergentProduct();
    BiSeries out = BiSeries::monomial(1, 0, 0, order);
    Rational sign(coef_sign > 0 ? 1 : -1);
    for (Rational e = a_qexp; e < order; e += step) {
        BiSeries factor = add(BiSeries::monomial(1, 0, 0, order),
                              BiSeries::monomial(sign, e, 0, order));
        out = mul_trunc(out, factor, order);
    }
    return out;
}

std::optional<Mismatch> equal_up_to(const BiSeries& a, const BiSeries& b, const Rational& order) {
    if (order > a.order() || order > b.order())
        throw OrderExceeded("equal_up_to: comparison order " + rational_str(order) +
                            " exceeds operand truncation (" + rational_str(a.order()) + ", " +
                            rational_str(b.order()) + ")");
    auto [qd, zd, x, y] = unify(a, b);
    Rational bound = order * qd;
    auto qexp = [&](const BiSeries::Key& k) { return make_rational(k.first, qd); };
    auto zexp = [&](const BiSeries::Key& k) { return make_rational(k.second, zd); };
    auto ax = x.terms().begin();
    auto by = y.terms().begin();
    auto in_window = [&](const BiSeries::TermMap::const_iterator& it,
                         const BiSeries::TermMap& m) {
        return it != m.end() && Rational(it->first.first) < bound;
    };
    while (in_window(ax, x.terms()) || in_window(by, y.terms())) {
        bool ha = in_window(ax, x.terms());
        bool hb = in_window(by, y.terms());
        if (ha && hb && ax->first == by->first) {
            if (ax->second != by->second)
                return Mismatch{qexp(ax->first), zexp(ax->first), ax->second, by->second};
            ++ax;
            ++by;
        } else if (ha && (!hb || ax->first < by->first)) {
            return Mismatch{qexp(ax->first), zexp(ax->first), ax->second, 0};
        } else {
            return Mismatch{qexp(by->first), zexp(by->first), 0, by->second};
        }
    }
    return std::nullopt;
}

std::string to_json_string(const BiSeries& s) {
    nlohmann::json j;
    j["qden"] = s.qden();
    j["zden"] = s.zden();
    j["order"] = rational_str(s.order());
    auto arr = nlohmann::json::array();
    for (const auto& [k, c] : s.terms())
        arr.push_back({k.first, k.second, rational_str(c)});
    j["terms"] = std::move(arr);
    return j.dump();
}

BiSeries biseries_from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    BiSeries::TermMap t;
    for (const auto& row : j.at("terms"))
        t[{row.at(0).get<std::int64_t>(), row.at(1).get<std::int64_t>()}] =
            parse_rational(row.at(2).get<std::string>());
    return BiSeries(j.at("qden").get<std::int64_t>(), j.at("zden").get<std::int64_t>(),
                    parse_rational(j.at("order").get<std::string>()), std::move(t));
}

}  // namespace macmahon
