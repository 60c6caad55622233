#include "pmat/report.hpp"

#include <sstream>

namespace pmat {

CheckReport CheckReport::passed(std::string check, nlohmann::ordered_json params) {
    return CheckReport{std::move(check), std::move(params), Verdict::pass, std::nullopt};
}

CheckReport CheckReport::failed(std::string check, nlohmann::ordered_json params,
                                nlohmann::ordered_json witness) {
    return CheckReport{std::move(check), std::move(params), Verdict::fail, std::move(witness)};
}

CheckReport CheckReport::na(std::string check, nlohmann::ordered_json params) {
    return CheckReport{std::move(check), std::move(params), Verdict::not_applicable, std::nullopt};
}

std::string verdict_str(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "not-applicable";
    }
}

nlohmann::ordered_json report_to_json(const CheckReport& r) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["params"] = r.params;
    j["verdict"] = verdict_str(r.verdict);
    if (r.witness) j["witness"] = *r.witness;
    return j;
}

namespace {

std::string scalar_str(const nlohmann::ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string packed_params(const CheckReport& r) {
    std::ostringstream out;
    bool first = true;
    for (auto it = r.params.begin(); it != r.params.end(); ++it) {
        if (!it.value().is_primitive()) continue;
        if (!first) out << ';';
        out << it.key() << '=' << scalar_str(it.value());
        first = false;
    }
    return out.str();
}

} // namespace

std::string report_csv_header() { return "check,params,verdict"; }

std::string report_to_csv(const CheckReport& r) {
    std::ostringstream out;
    out << r.check << ",\"" << packed_params(r) << "\"," << verdict_str(r.verdict);
    return out.str();
}

std::string report_to_plain(const CheckReport& r) {
    std::ostringstream out;
    out << verdict_str(r.verdict) << "  " << r.check;
    std::string p = packed_params(r);
    if (!p.empty()) out << " [" << p << "]";
    if (r.witness) out << "  witness: " << r.witness->dump();
    return out.str();
}

} // namespace pmat
