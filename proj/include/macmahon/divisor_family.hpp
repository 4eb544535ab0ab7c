#pragma once

#include <cstdint>
#include <vector>

#include "macmahon/series.hpp"

namespace macmahon {

enum class Kind { A, B };

/// A modulus n together with a symmetric set of residue representatives
/// S in {1,...,n}: for every l in S, n - l (taken mod n into {1,...,n})
/// is also in S.
struct ResidueSet {
    std::int64_t n;
    std::vector<std::int64_t> elems;  // strictly increasing

    bool contains_n() const { return !elems.empty() && elems.back() == n; }
    /// Does m >= 1 fall in one of the residue classes?
    bool admits(std::int64_t m) const;
};

/// Validates and canonicalizes (n, S); throws NotInRange, Duplicate or
/// NotSymmetric.
ResidueSet validate(std::int64_t n, std::vector<std::int64_t> elems);

/// The building block for one part size m:
///   A-kind: q^m/(1-q^m)^2 = sum_{s>=1} s q^{sm}
///   B-kind: q^m/(1+q^m)^2 = sum_{s>=1} (-1)^{s-1} s q^{sm}
UniSeries t_series(std::int64_t m, Kind kind, const Rational& order);

/// The generating functions for k = 0..kmax, computed as elementary
/// symmetric functions of the t_series over admissible part sizes.
struct SeriesFamily {
    ResidueSet spec;
    Kind kind;
    Rational order;
    std::vector<UniSeries> entries;
};

constexpr std::int64_t kmax_auto = -1;

SeriesFamily family(const ResidueSet& spec, Kind kind, std::int64_t kmax, const Rational& order);

/// Brute-force coefficient: enumerate all m = s_1 m_1 + ... + s_k m_k with
/// 0 < m_1 < ... < m_k admissible and s_i >= 1, summing prod s_i
/// (times (-1)^{sum s_i - k} for B-kind).
Rational coefficient_oracle(const ResidueSet& spec, Kind kind, std::int64_t k, std::int64_t m);

/// Bivariate generating polynomial prod over admissible m of (1 - x^2 t_m);
/// the z-slot carries x-powers. Coefficient of x^{2k} is (-1)^k * entries[k].
BiSeries gen_poly(const ResidueSet& spec, const Rational& order);

/// Largest k whose minimal admissible tuple sum is below `order`.
std::int64_t kmax_bound(const ResidueSet& spec, const Rational& order);

}  // namespace macmahon
