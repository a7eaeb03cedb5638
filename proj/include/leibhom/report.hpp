#pragma once

#include "leibhom/cohomology.hpp"

#include <json.hpp>

namespace leibhom {

using Json = nlohmann::ordered_json;

inline Json degree_json(const DegreeRecord& d) {
    Json j;
    j["k"] = d.k;
    j["dim"] = d.dim;
    j["kernel"] = d.kernel;
    j["image"] = d.image_in;
    j["cohomology"] = d.cohomology;
    j["mode"] = d.mode == RankMode::Exact ? "exact" : "probabilistic";
    if (!d.primes.empty()) j["primes"] = d.primes;
    return j;
}

inline Json report_json(const CohomologyReport& rep) {
    Json j;
    j["complex"] = rep.complex_id;
    j["field"] = rep.field;
    Json degs = Json::array();
    for (auto& d : rep.degrees) degs.push_back(degree_json(d));
    j["degrees"] = degs;
    Json checks = Json::array();
    for (auto& c : rep.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["expected"] = c.expected;
        cj["got"] = c.got;
        cj["pass"] = c.pass;
        checks.push_back(cj);
    }
    j["theorem_checks"] = checks;
    return j;
}

// RFC 4180: CRLF line endings, header row first.
inline std::string report_csv(const CohomologyReport& rep) {
    std::string out = "k,dim,kernel,image,cohomology,mode\r\n";
    for (auto& d : rep.degrees) {
        out += std::to_string(d.k) + "," + std::to_string(d.dim) + "," +
               std::to_string(d.kernel) + "," + std::to_string(d.image_in) + "," +
               std::to_string(d.cohomology) + "," +
               (d.mode == RankMode::Exact ? "exact" : "probabilistic") + "\r\n";
    }
    return out;
}

} // namespace leibhom
