#include "macmahon/divisor_family.hpp"

#include <algorithm>
#include <functional>

namespace macmahon {

bool ResidueSet::admits(std::int64_t m) const {
    std::int64_t rep = m % n;
    if (rep == 0) rep = n;
    return std::binary_search(elems.begin(), elems.end(), rep);
}

ResidueSet validate(std::int64_t n, std::vector<std::int64_t> elems) {
    if (n < 1) throw NotInRange("modulus must be positive");
    std::sort(elems.begin(), elems.end());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] < 1 || elems[i] > n)
            throw NotInRange("element " + std::to_string(elems[i]) + " outside 1.." +
                             std::to_string(n));
        if (i > 0 && elems[i] == elems[i - 1])
            throw Duplicate("duplicate element " + std::to_string(elems[i]));
    }
    ResidueSet spec{n, std::move(elems)};
    for (std::int64_t l : spec.elems) {
        std::int64_t mirror = (n - l) % n;
        if (mirror == 0) mirror = n;
        if (!std::binary_search(spec.elems.begin(), spec.elems.end(), mirror))
            throw NotSymmetric("set lacks " + std::to_string(mirror) + " paired with " +
                               std::to_string(l));
    }
    return spec;
}

UniSeries t_series(std::int64_t m, Kind kind, const Rational& order) {
    if (m < 1) throw SeriesError("t_series: part size must be positive");
    BiSeries::TermMap t;
    for (std::int64_t s = 1; Rational(s * m) < order; ++s) {
        Rational c(s);
        if (kind == Kind::B && s % 2 == 0) c = -c;
        t[{s * m, 0}] = c;
    }
    return BiSeries(1, 1, order, std::move(t));
}

std::int64_t kmax_bound(const ResidueSet& spec, const Rational& order) {
    // minimal k-tuple sum = sum of the k smallest admissible part sizes
    std::int64_t k = 0;
    Rational minsum = 0;
    for (std::int64_t m = 1;; ++m) {
        if (!spec.admits(m)) continue;
        minsum += m;
        if (minsum >= order) return k;
        ++k;
    }
}

SeriesFamily family(const ResidueSet& spec, Kind kind, std::int64_t kmax,
                    const Rational& order) {
    if (kmax == kmax_auto) kmax = kmax_bound(spec, order);
    std::vector<UniSeries> entries(static_cast<std::size_t>(kmax) + 1,
                                   BiSeries::zero(order));
    entries[0] = BiSeries::monomial(1, 0, 0, order);
    // Elementary-symmetric DP over admissible part sizes ascending:
    // E_k += t_m * E_{k-1}, k descending.
    for (std::int64_t m = 1; Rational(m) < order; ++m) {
        if (!spec.admits(m)) continue;
        UniSeries tm = t_series(m, kind, order);
        for (std::int64_t k = std::min<std::int64_t>(kmax, m); k >= 1; --k)
            entries[k] = add(entries[k], mul_trunc(tm, entries[k - 1], order));
    }
    return SeriesFamily{spec, kind, order, std::move(entries)};
}

Rational coefficient_oracle(const ResidueSet& spec, Kind kind, std::int64_t k, std::int64_t m) {
    if (k < 1 || m < 1) throw SeriesError("coefficient_oracle: k and m must be positive");
    Rational total = 0;
    // Recurse over increasing part sizes; parts_left smallest possible
    // completion prunes the descent.
    std::function<void(std::int64_t, std::int64_t, std::int64_t, const Integer&, std::int64_t)>
        descend = [&](std::int64_t prev_m, std::int64_t parts_left, std::int64_t budget,
                      const Integer& weight, std::int64_t mult_parity) {
            if (parts_left == 0) {
                if (budget == 0) {
                    if (kind == Kind::B && mult_parity % 2 != 0)
                        total -= weight;
                    else
                        total += weight;
                }
                return;
            }
            for (std::int64_t mi = prev_m + 1; mi <= budget; ++mi) {
                if (!spec.admits(mi)) continue;
                for (std::int64_t s = 1; s * mi <= budget; ++s)
                    descend(mi, parts_left - 1, budget - s * mi, weight * s,
                            mult_parity + (s - 1));
            }
        };
    descend(0, k, m, Integer(1), 0);
    return total;
}

BiSeries gen_poly(const ResidueSet& spec, const Rational& order) {
    BiSeries out = BiSeries::monomial(1, 0, 0, order);
    for (std::int64_t m = 1; Rational(m) < order; ++m) {
        if (!spec.admits(m)) continue;
        // factor 1 - x^2 * t_m(q), x-powers in the z-slot
        BiSeries factor = sub(BiSeries::monomial(1, 0, 0, order),
                              shift(t_series(m, Kind::A, order), 0, 2).truncated(order));
        out = mul_trunc(out, factor, order);
    }
    return out;
}

}  // namespace macmahon
