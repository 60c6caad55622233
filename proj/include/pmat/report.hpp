#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace pmat {

enum class Verdict { pass, fail, not_applicable };

// One verification instance: which check ran, on which parameters, and how
// it came out. Failures always carry a serialized witness.
struct CheckReport {
    std::string check;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    Verdict verdict = Verdict::pass;
    std::optional<nlohmann::ordered_json> witness;

    static CheckReport passed(std::string check, nlohmann::ordered_json params);
    static CheckReport failed(std::string check, nlohmann::ordered_json params,
                              nlohmann::ordered_json witness);
    static CheckReport na(std::string check, nlohmann::ordered_json params);
};

std::string verdict_str(Verdict v);

nlohmann::ordered_json report_to_json(const CheckReport& r);

// Rectangular CSV projection: check, params packed as k=v pairs, verdict.
std::string report_csv_header();
std::string report_to_csv(const CheckReport& r);

std::string report_to_plain(const CheckReport& r);

} // namespace pmat
