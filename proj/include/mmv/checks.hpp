#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mmv/report.hpp"

namespace mmv {

// derivative relations behind the main identity; analytic residual and finite-difference agreement
Report verify_lemma23(double a, double tol_analytic, double tol_fd);
Report verify_lemma28(double r, double tol_analytic, double tol_fd);

struct NamedCheck {
    std::string id;
    int criterion = 0; // acceptance group, 0 for supplementary checks
    std::function<std::vector<Report>()> run;
};

// every check behind `report --all`, in a fixed order
const std::vector<NamedCheck>& all_checks();
std::vector<Report> run_criterion(int k);
std::vector<Report> run_all();

} // namespace mmv
