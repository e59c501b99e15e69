#include "dpoly/identities.hpp"

#include <json.hpp>

namespace dpoly::identities {

std::string reports_to_json(std::span<const Report> reports, bool with_timing) {
    nlohmann::json out = nlohmann::json::array();
    for (const Report& report : reports) {
        nlohmann::json entry;
        entry["id"] = std::string(id_name(report.id));
        entry["n_max"] = report.n_max;
        entry["status"] = report.pass ? "pass" : "fail";
        if (report.witness) {
            nlohmann::json w;
            w["n"] = report.witness->n;
            if (report.witness->m) {
                w["m"] = *report.witness->m;
            }
            w["lhs"] = report.witness->lhs;
            w["rhs"] = report.witness->rhs;
            entry["witness"] = std::move(w);
        } else {
            entry["witness"] = nullptr;
        }
        if (with_timing) {
            entry["elapsed_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count();
        } else {
            entry["elapsed_ms"] = nullptr;
        }
        out.push_back(std::move(entry));
    }
    return out.dump(2);
}

} // namespace dpoly::identities
