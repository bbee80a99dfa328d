#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace mmv {

// One identity check. Exact checks use tolerance 0 and pass only when diff == 0.
struct Report {
    std::string id;
    std::string anchor; // short name of the identity being checked
    double lhs = 0, rhs = 0, diff = 0, tol = 0;
    bool pass = false;
    std::string notes;
    double seconds = 0;
};

Report make_report(std::string id, std::string anchor, double lhs, double rhs, double tol,
                   std::string notes = {});
// for exact checks: lhs/rhs carry a count or residual size, pass decided by the caller
Report exact_report(std::string id, std::string anchor, bool ok, double residual,
                    std::string notes = {});

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
// %.*g formatting for notes
std::string fmtg(double x, int digits = 6);

std::string csv_header();
std::string to_csv(const Report& r);

class Stopwatch {
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }
};

} // namespace mmv
