#pragma once

// Machine-readable records for distributions. Exact values travel as "p/q" strings with
// a decimal companion; parse_distribution_json() reverses distribution_json().

#include "photonsplit/fock.hpp"
#include "photonsplit/format.hpp"

#include "json.hpp"

#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

namespace photonsplit {

inline constexpr const char* kVersion = "0.1.0";

struct ReportRecord {
    int n1;
    int n2;
    std::string t2;
    int N1;
    int N2;
    std::string p;        // exact "p/q"
    std::string p_float;  // 15 significant digits, correctly rounded

    static ReportRecord from(const OutcomeDistribution& dist, const Outcome& o, const BigRational& prob) {
        return {dist.input.n1(), dist.input.n2(), rational_to_string(dist.splitter.t2()), o.n1, o.n2,
                rational_to_string(prob), to_decimal_string(prob)};
    }
};

inline std::vector<ReportRecord> records(const OutcomeDistribution& dist) {
    std::vector<ReportRecord> out;
    for (const auto& [o, p] : dist.entries) out.push_back(ReportRecord::from(dist, o, p));
    return out;
}

inline nlohmann::json meta_json() { return {{"version", kVersion}}; }

inline nlohmann::json outcome_json(const ReportRecord& r) {
    return {{"N1", r.N1}, {"N2", r.N2}, {"p", r.p}, {"p_float", std::strtod(r.p_float.c_str(), nullptr)}};
}

inline nlohmann::json distribution_json(const OutcomeDistribution& dist) {
    nlohmann::json outcomes = nlohmann::json::array();
    for (const auto& r : records(dist)) outcomes.push_back(outcome_json(r));
    return {{"input", {{"n1", dist.input.n1()}, {"n2", dist.input.n2()}}},
            {"splitter", {{"t2", rational_to_string(dist.splitter.t2())}}},
            {"outcomes", outcomes},
            {"meta", meta_json()}};
}

inline OutcomeDistribution parse_distribution_json(const nlohmann::json& j) {
    OutcomeDistribution dist{FockInput(j.at("input").at("n1").get<int>(), j.at("input").at("n2").get<int>()),
                             SplitterSpec(parse_rational(j.at("splitter").at("t2").get<std::string>())),
                             {}};
    for (const auto& o : j.at("outcomes")) {
        dist.entries.emplace(Outcome{o.at("N1").get<int>(), o.at("N2").get<int>()},
                             parse_rational(o.at("p").get<std::string>()));
    }
    return dist;
}

inline void write_distribution_csv(std::ostream& os, const OutcomeDistribution& dist) {
    os << "n1,n2,t2,N1,N2,p,p_float\n";
    for (const auto& r : records(dist)) {
        os << r.n1 << ',' << r.n2 << ',' << r.t2 << ',' << r.N1 << ',' << r.N2 << ',' << r.p << ',' << r.p_float
           << '\n';
    }
}

}  // namespace photonsplit
