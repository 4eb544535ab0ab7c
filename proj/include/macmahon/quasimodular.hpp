#pragma once

#include <cstdint>
#include <vector>

#include "macmahon/divisor_family.hpp"
#include "macmahon/report.hpp"
#include "macmahon/series.hpp"

namespace macmahon {

enum class Parity { Even, Odd };

/// c[k][w]:
///   Even: coefficient of x^{2k}   in arcsin(x/2)^{2w}
///   Odd:  coefficient of x^{2k+1} in arcsin(x/2)^{2w+1}
/// Zero for w > k, so reconstruction sums are finite.
std::vector<std::vector<Rational>> arcsin_power_coeffs(std::int64_t kmax, std::int64_t wmax,
                                                       Parity parity);

/// Coefficients a_m of sqrt(1 + (x/2)^2) = sum a_m x^{2m}.
std::vector<Rational> sqrt_shift_coeffs(std::int64_t mmax);

/// Pure-weight piece of the A-side decomposition: the multinomial sum of
/// signed theta derivative quotients (weight 2w for n not in S, the odd
/// 2w+1 structure with eta^3 and heat-equation factors otherwise).
UniSeries weight_part_A(const ResidueSet& spec, std::int64_t w, const Rational& order);

/// Unsigned-theta counterpart; n in S is WrongCase.
UniSeries weight_part_B(const ResidueSet& spec, std::int64_t w, const Rational& order);

struct WeightDecomposition {
    ResidueSet spec;
    Kind kind;
    Rational order;
    std::vector<std::pair<std::int64_t, UniSeries>> parts;  // (w, pure-weight piece)
    std::vector<Rational> kappa;                            // scalar per w
    std::vector<std::vector<Rational>> recon_matrix;        // c[k][w]
};

/// Assembles A_{S,n,k} (or B for n not in S) from the pure-weight pieces and
/// checks every k <= kmax against the directly computed family. Throws
/// ReconstructionMismatch on the first failure.
WeightDecomposition reconstruct(const ResidueSet& spec, Kind kind, std::int64_t kmax,
                                const Rational& order);

/// n-in-S B-case: decomposes the combined functions sum_m a_m B_{k-m} via the
/// unsigned theta machinery and solves for B_k recursively; verified against
/// the family.
WeightDecomposition b_decompose_recursive(const ResidueSet& spec, std::int64_t kmax,
                                          const Rational& order);

/// Two routes to the same pure-weight piece: z-derivatives of the bivariate
/// theta product versus the closed multinomial formula.
VerifyReport two_path_check(const ResidueSet& spec, Kind kind, std::int64_t w,
                            const Rational& order);

std::string to_json_string(const WeightDecomposition& d);

}  // namespace macmahon
