#pragma once

#include <gmpxx.h>

#include "mmv/report.hpp"

namespace mmv {

struct LatticeSumSpec {
    mpq_class b, c;
    LatticeSumSpec(mpq_class b_, mpq_class c_);
    mpq_class prefactor() const; // (1+b+c+bc)^2
};

// sum_n (-1)^n exp(-w t (6n+1)^2); small w t goes through the eta inversion
double theta_w(double w, double t, int terms = 12);

struct LatticeSumValue {
    double value = 0;
    double error = 0; // quadrature estimate times prefactor
};

// theta-integral route
LatticeSumValue lattice_F(const LatticeSumSpec& s, double target_error = 1e-12, int theta_terms = 12);
// symmetric cube |n_i| <= N, the oracle
double lattice_F_brute(const LatticeSumSpec& s, int N = 40);

// m(Q_3) = 15/(2 pi^2) (F(2,5/3) - k F(2,15)), k = 1/4; the k argument exists for the negative control
Report verify_rogers_yuttanan(double tol, const mpq_class& k = mpq_class(1, 4));
Report verify_latsum_brute(double tol);

} // namespace mmv
