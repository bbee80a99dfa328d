#pragma once

#include <functional>
#include <vector>

namespace mmv {

struct QuadResult {
    double value = 0;
    double error = 0;
    long evals = 0;
    bool converged = true;
};

using Fn = std::function<double(double)>;

// adaptive Gauss-Kronrod 7/15, bisecting the worst interval first
QuadResult gk15(const Fn& f, double a, double b, double tol, int max_intervals = 20000);

// same, over [pts[0], pts.back()] split at every listed point
QuadResult gk15_split(const Fn& f, std::vector<double> pts, double tol, int max_intervals = 20000);

// tanh-sinh on a finite interval; endpoint singularities allowed
QuadResult tanh_sinh(const Fn& f, double a, double b, double tol, int max_levels = 12);

// exp-sinh on [a, inf)
QuadResult exp_sinh(const Fn& f, double a, double tol, int max_levels = 12);

} // namespace mmv
