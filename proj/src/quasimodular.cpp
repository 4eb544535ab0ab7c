#include "macmahon/quasimodular.hpp"

#include <nlohmann/json.hpp>

#include <functional>

#include "macmahon/theta.hpp"

namespace macmahon {

namespace {

// Polynomial in x as dense coefficient vector, truncated beyond max_deg.
using Poly = std::vector<Rational>;

Poly poly_mul(const Poly& a, const Poly& b, std::size_t max_deg) {
    Poly out(std::min(a.size() + b.size() - 1, max_deg + 1), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= max_deg; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

Poly arcsin_half_poly(std::size_t max_deg) {
    // arcsin(x/2) = sum_j binom(2j,j)/(4^j (2j+1)) (x/2)^{2j+1}
    Poly p(max_deg + 1, Rational(0));
    for (std::size_t j = 0; 2 * j + 1 <= max_deg; ++j) {
        Rational c = Rational(binomial(2 * j, j)) /
                     (rational_pow(4, j) * Rational(2 * j + 1) * rational_pow(2, 2 * j + 1));
        p[2 * j + 1] = c;
    }
    return p;
}

Rational multinomial(std::uint64_t total, const std::vector<std::uint64_t>& parts) {
    Rational out(factorial(total));
    for (auto p : parts) out /= Rational(factorial(p));
    return out;
}

// All compositions of `total` into `slots` non-negative parts.
void for_each_composition(std::uint64_t total, std::size_t slots,
                          std::vector<std::uint64_t>& cur,
                          const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
    if (cur.size() == slots - 1) {
        cur.push_back(total);
        fn(cur);
        cur.pop_back();
        return;
    }
    for (std::uint64_t i = 0; i <= total; ++i) {
        cur.push_back(i);
        for_each_composition(total - i, slots, cur, fn);
        cur.pop_back();
    }
}

struct QuotientData {
    std::vector<Rational> alphas;  // characteristics of the non-n elements
    Rational den_lead;             // leading q-exponent of the denominator
    bool with_n;
    std::int64_t n;
};

QuotientData quotient_data(const ResidueSet& spec, bool is_signed) {
    QuotientData d;
    d.n = spec.n;
    d.with_n = spec.contains_n();
    d.den_lead = 0;
    for (std::int64_t l : spec.elems) {
        if (is_signed && l == spec.n) continue;  // the l = n factor is eta^3 on the A side
        Rational a = alpha(spec.n, l);
        d.alphas.push_back(a);
        Rational a0 = normalize_characteristic(a);
        d.den_lead += Rational(spec.n) * a0 * a0 / 2;
    }
    if (is_signed && d.with_n) d.den_lead += make_rational(spec.n, 8);
    return d;
}

}  // namespace

std::vector<std::vector<Rational>> arcsin_power_coeffs(std::int64_t kmax, std::int64_t wmax,
                                                       Parity parity) {
    std::size_t max_deg =
        static_cast<std::size_t>(2 * kmax) + (parity == Parity::Odd ? 1 : 0);
    Poly base = arcsin_half_poly(max_deg);
    // power = arcsin(x/2)^{2w} (even) or ^{2w+1} (odd), advanced by base^2
    Poly power{Rational(1)};
    if (parity == Parity::Odd) power = base;
    Poly base_sq = poly_mul(base, base, max_deg);

    std::vector<std::vector<Rational>> c(static_cast<std::size_t>(kmax) + 1,
                                         std::vector<Rational>(wmax + 1, Rational(0)));
    for (std::int64_t w = 0; w <= wmax; ++w) {
        for (std::int64_t k = 0; k <= kmax; ++k) {
            std::size_t deg = static_cast<std::size_t>(2 * k) + (parity == Parity::Odd ? 1 : 0);
            if (deg < power.size()) c[k][w] = power[deg];
        }
        power = poly_mul(power, base_sq, max_deg);
    }
    return c;
}

std::vector<Rational> sqrt_shift_coeffs(std::int64_t mmax) {
    // binom(1/2, m) / 4^m
    std::vector<Rational> a(static_cast<std::size_t>(mmax) + 1);
    Rational binom = 1;
    for (std::int64_t m = 0; m <= mmax; ++m) {
        a[m] = binom / rational_pow(4, m);
        binom *= (make_rational(1, 2) - m) / Rational(m + 1);
    }
    return a;
}

namespace {

UniSeries weight_part_impl(const ResidueSet& spec, bool is_signed, std::int64_t w,
                           const Rational& order) {
    QuotientData d = quotient_data(spec, is_signed);
    Rational work = order + d.den_lead;
    std::size_t s = d.alphas.size();

    std::vector<std::vector<UniSeries>> derivs(s);
    std::uint64_t tmax = static_cast<std::uint64_t>(is_signed && d.with_n ? 2 * w + 1 : 2 * w);
    for (std::size_t j = 0; j < s; ++j)
        for (std::uint64_t t = 0; t <= tmax; ++t)
            derivs[j].push_back(theta_value_series(d.alphas[j], d.n, is_signed, t, work));

    UniSeries den = BiSeries::monomial(1, 0, 0, work);
    for (std::size_t j = 0; j < s; ++j) den = mul_trunc(den, derivs[j][0], work);

    UniSeries numerator = BiSeries::zero(work);
    if (is_signed && d.with_n) {
        // sum over (2i0+1) + i_1 + ... + i_s = 2w+1 of
        // multinomial * (2/n)^{i0} D_q^{i0} eta(q^n)^3 * prod theta^{(i_j)}
        UniSeries eta3 = int_pow(eta(d.n, work), 3).truncated(work);
        std::vector<UniSeries> eta3_dq{eta3};
        for (std::int64_t i = 1; i <= w; ++i)
            eta3_dq.push_back(macmahon::scale(make_rational(2, d.n), dq(eta3_dq.back())));
        den = mul_trunc(den, eta3, work);

        std::uint64_t total = static_cast<std::uint64_t>(2 * w + 1);
        for (std::uint64_t i0 = 0; 2 * i0 + 1 <= total; ++i0) {
            std::vector<std::uint64_t> cur;
            for_each_composition(total - (2 * i0 + 1), s == 0 ? 1 : s, cur,
                                 [&](const std::vector<std::uint64_t>& comp) {
                if (s == 0 && comp[0] != 0) return;
                std::vector<std::uint64_t> parts{2 * i0 + 1};
                if (s > 0) parts.insert(parts.end(), comp.begin(), comp.end());
                UniSeries term = eta3_dq[i0];
                for (std::size_t j = 0; j < s; ++j)
                    term = mul_trunc(term, derivs[j][comp[j]], work);
                numerator = add(numerator, macmahon::scale(multinomial(total, parts), term));
            });
        }
    } else {
        std::uint64_t total = static_cast<std::uint64_t>(2 * w);
        std::vector<std::uint64_t> cur;
        for_each_composition(total, s == 0 ? 1 : s, cur,
                             [&](const std::vector<std::uint64_t>& comp) {
            if (s == 0 && comp[0] != 0) return;
            UniSeries term = BiSeries::monomial(1, 0, 0, work);
            for (std::size_t j = 0; j < s; ++j)
                term = mul_trunc(term, derivs[j][comp[j]], work);
            std::vector<std::uint64_t> parts(comp.begin(), comp.begin() + s);
            numerator = add(numerator, macmahon::scale(multinomial(total, parts), term));
        });
    }

    UniSeries den_inv;
    try {
        den_inv = invert(den);
    } catch (const SeriesError& e) {
        throw InversionFailure(e.what());
    }
    return mul(numerator, den_inv).truncated(order);
}

}  // namespace

UniSeries weight_part_A(const ResidueSet& spec, std::int64_t w, const Rational& order) {
    return weight_part_impl(spec, /*is_signed=*/true, w, order);
}

UniSeries weight_part_B(const ResidueSet& spec, std::int64_t w, const Rational& order) {
    if (spec.contains_n())
        throw WrongCase("weight_part_B: n in S requires the recursive decomposition");
    return weight_part_impl(spec, /*is_signed=*/false, w, order);
}

namespace {

Rational kappa_even(std::int64_t w) {
    // (-4)^w / (2w)!
    Rational k = rational_pow(4, w) / Rational(factorial(2 * w));
    return (w % 2) ? -k : k;
}

Rational kappa_odd(std::int64_t w) {
    // (-1)^w 2^{2w+1} / (2w+1)!
    Rational k = rational_pow(2, 2 * w + 1) / Rational(factorial(2 * w + 1));
    return (w % 2) ? -k : k;
}

}  // namespace

WeightDecomposition reconstruct(const ResidueSet& spec, Kind kind, std::int64_t kmax,
                                const Rational& order) {
    if (kind == Kind::B && spec.contains_n())
        return b_decompose_recursive(spec, kmax, order);

    bool odd_case = (kind == Kind::A) && spec.contains_n();
    bool is_signed = (kind == Kind::A);
    auto c = arcsin_power_coeffs(kmax, kmax, odd_case ? Parity::Odd : Parity::Even);

    WeightDecomposition dec{spec, kind, order, {}, {}, c};
    for (std::int64_t w = 0; w <= kmax; ++w) {
        dec.parts.emplace_back(w, weight_part_impl(spec, is_signed, w, order));
        dec.kappa.push_back(odd_case ? kappa_odd(w) : kappa_even(w));
    }

    SeriesFamily fam = family(spec, kind, kmax, order);
    for (std::int64_t k = 0; k <= kmax; ++k) {
        UniSeries rec = BiSeries::zero(order);
        for (std::int64_t w = 0; w <= k; ++w)
            rec = add(rec, macmahon::scale(dec.kappa[w] * c[k][w], dec.parts[w].second));
        // Theorem 3's even case carries no (-1)^k, so the B reconstruction
        // picks one up from the x -> ix substitution.
        if (kind == Kind::B && k % 2 == 1) rec = negate(rec);
        if (auto mm = equal_up_to(rec, fam.entries[k], order))
            throw ReconstructionMismatch(
                "k=" + std::to_string(k) + " first differs at q^" + rational_str(mm->qexp) +
                ": " + rational_str(mm->lhs) + " vs " + rational_str(mm->rhs));
    }
    return dec;
}

WeightDecomposition b_decompose_recursive(const ResidueSet& spec, std::int64_t kmax,
                                          const Rational& order) {
    if (!spec.contains_n())
        throw WrongCase("b_decompose_recursive: requires n in S");

    auto c = arcsin_power_coeffs(kmax, kmax, Parity::Even);
    WeightDecomposition dec{spec, Kind::B, order, {}, {}, c};
    for (std::int64_t w = 0; w <= kmax; ++w) {
        dec.parts.emplace_back(w, weight_part_impl(spec, /*is_signed=*/false, w, order));
        dec.kappa.push_back(kappa_even(w));
    }

    // combined functions T_k = sum_m a_m B_{k-m}, from the decomposition
    std::vector<UniSeries> combined;
    for (std::int64_t k = 0; k <= kmax; ++k) {
        UniSeries rec = BiSeries::zero(order);
        for (std::int64_t w = 0; w <= k; ++w)
            rec = add(rec, macmahon::scale(dec.kappa[w] * c[k][w], dec.parts[w].second));
        if (k % 2 == 1) rec = negate(rec);
        combined.push_back(std::move(rec));
    }

    // peel off the sqrt factor recursively: B_k = T_k - sum_{m>=1} a_m B_{k-m}
    std::vector<Rational> a = sqrt_shift_coeffs(kmax);
    std::vector<UniSeries> b;
    for (std::int64_t k = 0; k <= kmax; ++k) {
        UniSeries bk = combined[k];
        for (std::int64_t m = 1; m <= k; ++m)
            bk = sub(bk, macmahon::scale(a[m], b[k - m]));
        b.push_back(std::move(bk));
    }

    SeriesFamily fam = family(spec, Kind::B, kmax, order);
    for (std::int64_t k = 0; k <= kmax; ++k) {
        if (auto mm = equal_up_to(b[k], fam.entries[k], order))
            throw ReconstructionMismatch(
                "B k=" + std::to_string(k) + " first differs at q^" + rational_str(mm->qexp) +
                ": " + rational_str(mm->lhs) + " vs " + rational_str(mm->rhs));
    }
    return dec;
}

VerifyReport two_path_check(const ResidueSet& spec, Kind kind, std::int64_t w,
                            const Rational& order) {
    bool is_signed = (kind == Kind::A);
    QuotientData d = quotient_data(spec, is_signed);
    Rational work = order + d.den_lead;

    // derivative path: D_z powers of the bivariate theta product, then z = 1
    BiSeries prod = BiSeries::monomial(1, 0, 0, work);
    for (const Rational& a : d.alphas)
        prod = mul_trunc(prod, theta_series(a, d.n, is_signed, work), work);
    // For unsigned thetas the l = n factor is already among d.alphas; the
    // signed case carries it separately (eta^3 in the denominator).
    std::int64_t dz_count = 2 * w;
    if (is_signed && d.with_n) {
        prod = mul_trunc(prod, theta_series(make_rational(1, 2), d.n, true, work), work);
        dz_count = 2 * w + 1;
    }
    for (std::int64_t i = 0; i < dz_count; ++i) prod = dz(prod);

    UniSeries den = BiSeries::monomial(1, 0, 0, work);
    for (const Rational& a : d.alphas)
        den = mul_trunc(den, theta_value_series(a, d.n, is_signed, 0, work), work);
    if (is_signed && d.with_n) den = mul_trunc(den, int_pow(eta(d.n, work), 3).truncated(work), work);

    UniSeries path_deriv = mul(eval_z1(prod), invert(den)).truncated(order);
    UniSeries path_closed = weight_part_impl(spec, is_signed, w, order);

    std::string detail = "n=" + std::to_string(spec.n) + " w=" + std::to_string(w) +
                         (kind == Kind::A ? " kind=A" : " kind=B");
    return VerifyReport{"two-path", detail, order, equal_up_to(path_deriv, path_closed, order)};
}

std::string to_json_string(const WeightDecomposition& d) {
    nlohmann::json j;
    j["spec"] = {{"n", d.spec.n}, {"set", d.spec.elems}};
    j["kind"] = (d.kind == Kind::A) ? "A" : "B";
    j["order"] = rational_str(d.order);
    auto parts = nlohmann::json::array();
    for (const auto& [w, s] : d.parts)
        parts.push_back({{"w", w}, {"series", nlohmann::json::parse(to_json_string(s))}});
    j["parts"] = std::move(parts);
    auto kap = nlohmann::json::array();
    for (const auto& k : d.kappa) kap.push_back(rational_str(k));
    j["kappa"] = std::move(kap);
    j["recon"] = "PASS";  // construction throws on mismatch
    return j.dump();
}

}  // namespace macmahon
