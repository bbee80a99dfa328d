#pragma once

#include <complex>

#include "mmv/report.hpp"

namespace mmv {

// Carlson symmetric forms. Real rj accepts p < 0 (Cauchy principal value), real rc accepts y < 0.
double carlson_rf(double x, double y, double z);
double carlson_rd(double x, double y, double z);
double carlson_rj(double x, double y, double z, double p);
double carlson_rc(double x, double y);
std::complex<double> carlson_rf(std::complex<double> x, std::complex<double> y, std::complex<double> z);
std::complex<double> carlson_rd(std::complex<double> x, std::complex<double> y, std::complex<double> z);
std::complex<double> carlson_rj(std::complex<double> x, std::complex<double> y, std::complex<double> z,
                                std::complex<double> p);

// All take the modulus z (not the parameter z^2).
struct EllipticValue {
    enum Convention { Principal, RealPartReflection };
    double value = 0;
    Convention convention = Principal;
};

EllipticValue ellipK(double z);
EllipticValue ellipE(double z);
// real part convention for z > 1; principal value in x for n > 1
EllipticValue ellipPi(double n, double z);

std::complex<double> ellipK(std::complex<double> z);
std::complex<double> ellipE(std::complex<double> z);
std::complex<double> ellipPi(std::complex<double> n, std::complex<double> z);

// 2F1(1/3, 2/3; 1; z), z < 1
double hyp2f1_third(double z);
// generic Gauss series, |z| < 1, used by the transformation branches
double hyp2f1_series(double a, double b, double c, double z);

struct ModulusPair {
    double m, n;
};
// m = sqrt(16a/((a-1)^3(a+3))), n = 4a/((a-1)(a+3))
ModulusPair real_family_mn(double a);
// m = sqrt(p^3(2+p)/(1+2p)), n = -p^2/(1+2p)
ModulusPair imag_family_mn(double p);
// r = (1-p)(2+p)/(p(1+p)) inverted on p in (0,1)
double p_from_r(double r);
double r_from_p(double p);

double kp_residual(double a);
double com3_residual(double p);
Report verify_KP(double a, double tol);
Report verify_com3(double p, double tol);

} // namespace mmv
