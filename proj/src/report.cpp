#include "macmahon/report.hpp"

#include <nlohmann/json.hpp>

namespace macmahon {

std::string to_json_string(const VerifyReport& r) {
    nlohmann::json j;
    j["identity"] = r.identity;
    if (!r.detail.empty()) j["detail"] = r.detail;
    j["order"] = rational_str(r.order);
    j["status"] = r.pass() ? "PASS" : "FAIL";
    if (r.first_mismatch) {
        j["first_mismatch"] = {{"q", rational_str(r.first_mismatch->qexp)},
                               {"z_or_x", rational_str(r.first_mismatch->zexp)},
                               {"lhs", rational_str(r.first_mismatch->lhs)},
                               {"rhs", rational_str(r.first_mismatch->rhs)}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    return j.dump();
}

}  // namespace macmahon
