#pragma once

#include <optional>
#include <string>

#include "macmahon/series.hpp"

namespace macmahon {

struct VerifyReport {
    std::string identity;
    std::string detail;  // free-form: residue set, characteristic, ...
    Rational order;
    std::optional<Mismatch> first_mismatch;  // empty means PASS

    bool pass() const { return !first_mismatch.has_value(); }
};

std::string to_json_string(const VerifyReport& r);

}  // namespace macmahon
