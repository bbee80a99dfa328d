#include "mmv/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace mmv {

Report make_report(std::string id, std::string anchor, double lhs, double rhs, double tol,
                   std::string notes) {
    Report r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.lhs = lhs;
    r.rhs = rhs;
    r.diff = std::fabs(lhs - rhs);
    r.tol = tol;
    r.pass = r.diff < tol; // NaN fails
    r.notes = std::move(notes);
    return r;
}

Report exact_report(std::string id, std::string anchor, bool ok, double residual,
                    std::string notes) {
    Report r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.lhs = residual;
    r.rhs = 0;
    r.diff = residual;
    r.tol = 0;
    r.pass = ok && residual == 0;
    r.notes = std::move(notes);
    return r;
}

nlohmann::json to_json(const Report& r) {
    return {{"id", r.id},   {"anchor", r.anchor}, {"lhs", r.lhs},       {"rhs", r.rhs},
            {"diff", r.diff}, {"tol", r.tol},     {"pass", r.pass},     {"notes", r.notes},
            {"seconds", r.seconds}};
}

Report report_from_json(const nlohmann::json& j) {
    Report r;
    r.id = j.at("id");
    r.anchor = j.at("anchor");
    r.lhs = j.at("lhs");
    r.rhs = j.at("rhs");
    r.diff = j.at("diff");
    r.tol = j.at("tol");
    r.pass = j.at("pass");
    r.notes = j.at("notes");
    r.seconds = j.at("seconds");
    return r;
}

std::string fmtg(double x, int digits) {
    char b[64];
    std::snprintf(b, sizeof b, "%.*g", digits, x);
    return b;
}

std::string csv_header() { return "id,anchor,lhs,rhs,diff,tol,pass,notes,seconds"; }

static std::string csv_quote(const std::string& s) {
    std::string o = "\"";
    for (char c : s) {
        if (c == '"') o += '"';
        o += c;
    }
    return o + "\"";
}

std::string to_csv(const Report& r) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%s", r.lhs, r.rhs, r.diff, r.tol,
                  r.pass ? "true" : "false");
    std::ostringstream os;
    os << csv_quote(r.id) << ',' << csv_quote(r.anchor) << ',' << buf << ',' << csv_quote(r.notes)
       << ',';
    char t[64];
    std::snprintf(t, sizeof t, "%.17g", r.seconds);
    os << t;
    return os.str();
}

} // namespace mmv
