#pragma once

#include <stdexcept>
#include <string>

namespace macmahon {

struct SeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroSeries : SeriesError {
    ZeroSeries() : SeriesError("invert: zero series") {}
};

struct AmbiguousLeadingTerm : SeriesError {
    AmbiguousLeadingTerm() : SeriesError("invert: lowest q-layer is not a single monomial") {}
};

struct OrderExceeded : SeriesError {
    explicit OrderExceeded(const std::string& what) : SeriesError(what) {}
};

struct DivergentProduct : SeriesError {
    DivergentProduct() : SeriesError("pochhammer: starting exponent must be positive") {}
};

struct UnboundedXDegree : SeriesError {
    UnboundedXDegree() : SeriesError("subst_x_to_z: negative or fractional x-power") {}
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotInRange : ValidationError {
    explicit NotInRange(const std::string& what) : ValidationError(what) {}
};

struct NotSymmetric : ValidationError {
    explicit NotSymmetric(const std::string& what) : ValidationError(what) {}
};

struct Duplicate : ValidationError {
    explicit Duplicate(const std::string& what) : ValidationError(what) {}
};

struct WrongCase : std::runtime_error {
    explicit WrongCase(const std::string& what) : std::runtime_error(what) {}
};

struct ReconstructionMismatch : std::runtime_error {
    explicit ReconstructionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct InversionFailure : std::runtime_error {
    explicit InversionFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace macmahon
