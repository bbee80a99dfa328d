#pragma once

#include <complex>
#include <string>

#include "mmv/ecurve.hpp"
#include "mmv/report.hpp"

namespace mmv {

using cplxd = std::complex<double>;

// Lambda = w1 Z + w2 Z, w1 > 0 the generator of Lambda cap R, tau = w2 / w1 in H
struct PeriodLattice {
    cplxd w1, w2, tau;
    double g2 = 0, g3 = 0;        // from the curve
    double g2_lat = 0, g3_lat = 0; // from E4, E6 of tau; must agree
    std::string basis;            // which roots gave the periods
};

PeriodLattice periods(const AInv& a);

// Weierstrass p and p' of the lattice at z
void weierstrass_p(const PeriodLattice& L, cplxd z, cplxd& p, cplxd& dp);
// curve point (x, y) at z (z not in the lattice)
void curve_point_at(const AInv& a, const PeriodLattice& L, cplxd z, cplxd& x, cplxd& y);

double j_from_tau(cplxd tau);

// beta = a + b tau
struct LatticeCoordinate {
    Q a = 0, b = 0;
};

// torsion point of order n -> (i + j tau)/n; throws "not torsion at tolerance" if nothing snaps
LatticeCoordinate elliptic_log(const AInv& a, const PeriodLattice& L, const CurvePoint& p, double tol = 1e-8);

struct BlochValue {
    double value = 0; // imaginary part of the normalized sum
    double tail = 0;  // |R(M) - R(M/2)|
    long M = 0;
};

// -(Im tau)^2/pi sum' sin(2 pi (b n - a m)) / ((m tau + n)^2 (m conj(tau) + n)), Im part,
// sup-norm shells 0 < max(|m|, |n|) <= M
BlochValue bloch_R(cplxd tau, const LatticeCoordinate& beta, long M = 2000);
// linear extension over a divisor of torsion points
BlochValue bloch_R(const AInv& a, const PeriodLattice& L, const Divisor& d, long M = 2000);

int c_alpha(const Q& alpha); // -1 for alpha > 0, +1 for alpha < 0; throws for 8, -1, 0

Report verify_mellit(const Q& alpha, double tol, long M = 2000);
Report verify_theorem15_chain(double tol);
Report verify_j_from_periods(const Q& A, double tol); // E_a with A = a^2

} // namespace mmv
