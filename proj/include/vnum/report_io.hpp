#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vnum/checks.hpp"

namespace vnum {

/// Stable machine-readable form of one report. Key order is fixed; JSON is
/// the compatibility surface, the table is for humans.
inline nlohmann::ordered_json report_to_json(const CheckReport& r) {
    nlohmann::ordered_json j;
    j["check_id"] = r.check_id;
    nlohmann::ordered_json instance;
    for (const auto& [key, value] : r.instance) {
        instance[key] = value;
    }
    j["instance"] = std::move(instance);
    if (r.formula) {
        j["formula"] = *r.formula;
    } else if (r.formula_interval) {
        j["formula"] = {{"lo", r.formula_interval->first}, {"hi", r.formula_interval->second}};
    } else {
        j["formula"] = nullptr;
    }
    nlohmann::ordered_json computed;
    for (const auto& [key, value] : r.computed) {
        computed[key] = value;
    }
    j["computed"] = std::move(computed);
    j["status"] = to_string(r.status);
    j["known_issue"] = r.known_issue;
    j["notes"] = r.notes;
    return j;
}

inline nlohmann::ordered_json reports_to_json(const std::vector<CheckReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        arr.push_back(report_to_json(r));
    }
    return arr;
}

namespace report_detail {

inline std::string instance_text(const CheckReport& r) {
    std::string s;
    for (const auto& [key, value] : r.instance) {
        if (!s.empty()) {
            s += " ";
        }
        s += key + "=" + std::to_string(value);
    }
    return s;
}

inline std::string formula_text(const CheckReport& r) {
    if (r.formula) {
        return std::to_string(*r.formula);
    }
    if (r.formula_interval) {
        return "[" + std::to_string(r.formula_interval->first) + ", " +
               std::to_string(r.formula_interval->second) + "]";
    }
    return "-";
}

inline std::string computed_text(const CheckReport& r) {
    std::string s;
    for (const auto& [key, value] : r.computed) {
        if (!s.empty()) {
            s += " ";
        }
        s += key + "=" + std::to_string(value);
    }
    return s;
}

}  // namespace report_detail

/// Fixed-width table rendering of a report list.
inline std::string reports_to_table(const std::vector<CheckReport>& reports) {
    size_t w_id = 8;
    size_t w_inst = 8;
    size_t w_formula = 7;
    size_t w_computed = 8;
    for (const auto& r : reports) {
        w_id = std::max(w_id, r.check_id.size());
        w_inst = std::max(w_inst, report_detail::instance_text(r).size());
        w_formula = std::max(w_formula, report_detail::formula_text(r).size());
        w_computed = std::max(w_computed, report_detail::computed_text(r).size());
    }
    size_t w_status = 6;
    for (const auto& r : reports) {
        size_t len = std::string(to_string(r.status)).size() + (r.known_issue ? 8 : 0);
        w_status = std::max(w_status, len);
    }
    std::ostringstream os;
    os << std::left << std::setw(int(w_id)) << "check" << "  " << std::setw(int(w_inst))
       << "instance" << "  " << std::setw(int(w_formula)) << "formula" << "  "
       << std::setw(int(w_computed)) << "computed" << "  " << std::setw(int(w_status)) << "status"
       << "  notes\n";
    for (const auto& r : reports) {
        std::string status = to_string(r.status);
        if (r.known_issue) {
            status += " (known)";
        }
        os << std::left << std::setw(int(w_id)) << r.check_id << "  " << std::setw(int(w_inst))
           << report_detail::instance_text(r) << "  " << std::setw(int(w_formula))
           << report_detail::formula_text(r) << "  " << std::setw(int(w_computed))
           << report_detail::computed_text(r) << "  " << std::setw(int(w_status)) << status << "  "
           << r.notes << "\n";
    }
    return os.str();
}

}  // namespace vnum
