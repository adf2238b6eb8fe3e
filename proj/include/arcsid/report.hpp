#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace arcsid {

struct FirstFailure {
    long long n = 0;
    std::string lhs;
    std::string rhs;
};

// Outcome of sweeping one identity (in one form) over a contiguous range of n.
struct VerifyReport {
    std::string identity;
    std::optional<std::string> form;  // absent for identities with a single form
    long long n_lo = 0;
    long long n_hi = 0;
    bool passed = false;
    std::optional<FirstFailure> first_failure;  // smallest failing n when !passed
    double elapsed_ms = 0.0;
};

// JSON serialization. ordered_json keeps insertion order, so identical inputs
// yield byte-identical output apart from elapsed_ms. Exact values travel as
// strings to survive losslessly.
inline nlohmann::ordered_json report_to_json(const VerifyReport& r) {
    nlohmann::ordered_json j;
    j["identity"] = r.identity;
    if (r.form) {
        j["form"] = *r.form;
    } else {
        j["form"] = nullptr;
    }
    j["range"] = nlohmann::ordered_json::array({r.n_lo, r.n_hi});
    j["status"] = r.passed ? "pass" : "fail";
    if (r.first_failure) {
        nlohmann::ordered_json f;
        f["n"] = r.first_failure->n;
        f["lhs"] = r.first_failure->lhs;
        f["rhs"] = r.first_failure->rhs;
        j["first_failure"] = f;
    } else {
        j["first_failure"] = nullptr;
    }
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline nlohmann::ordered_json reports_to_json(const std::vector<VerifyReport>& rs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) arr.push_back(report_to_json(r));
    return arr;
}

// CSV with one row per report. Cells that could contain commas or quotes
// (lhs/rhs strings are free-form when they carry error text) are quoted when
// needed.
inline std::string reports_to_csv(const std::vector<VerifyReport>& rs) {
    auto cell = [](const std::string& s) -> std::string {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += "\"\"";
            else out += c;
        }
        out += "\"";
        return out;
    };
    std::string out = "identity,form,n_lo,n_hi,status,fail_n,lhs,rhs\n";
    for (const auto& r : rs) {
        out += cell(r.identity);
        out += ',';
        out += r.form ? cell(*r.form) : "";
        out += ',';
        out += std::to_string(r.n_lo);
        out += ',';
        out += std::to_string(r.n_hi);
        out += ',';
        out += r.passed ? "pass" : "fail";
        out += ',';
        if (r.first_failure) {
            out += std::to_string(r.first_failure->n);
            out += ',';
            out += cell(r.first_failure->lhs);
            out += ',';
            out += cell(r.first_failure->rhs);
        } else {
            out += ",,";
        }
        out += '\n';
    }
    return out;
}

}  // namespace arcsid
