#pragma once

#include "mmv/laurent.hpp"
#include "mmv/report.hpp"

namespace mmv {

struct MahlerResult {
    enum Method { Jensen1D, Torus2D };
    double value = 0;
    double error = 0;
    Method method = Jensen1D;
    long nodes = 0;
    bool budget_exceeded = false;
};

const char* method_name(MahlerResult::Method m);

// midpoint tensor rule on the torus, doubling until two levels agree to target_error
MahlerResult mahler_torus2d(const LaurentPoly2& p, double target_error, long max_nodes = 1L << 22);

// Jensen in y, adaptive quadrature in x = e^{i theta}; needs y-degree span <= 2
MahlerResult mahler_y_quadratic(const LaurentPoly2& p, double target_error);

// picks Jensen when the y-span allows it, else the torus rule
MahlerResult mahler(const LaurentPoly2& p, double target_error);

// plain-double conveniences for the families
double m_Pac(cplx a, cplx c, double tol = 1e-11);
double m_Qk(double k, double tol = 1e-11);
double m_Sr(double r, double tol = 1e-11);
inline double g_of(double alpha, double tol = 1e-11) { return m_Qk(alpha, tol); }

// H(a) = m(P_{a,a^2-1}), G(a) = m(Q_{a^2-1})
double dH_da(double a);
double dG_da(double a);        // elliptic K form
double dG_da_hyp(double a);    // 2F1(1/3,2/3;1;.) form
double dSr_dr(double r);
double dQ_dr(double r);        // d/dr m(Q_{-r-1})

// central differences of the quadrature, step h = 1e-4 * scale
double fd_H(double a);
double fd_G(double a);
double fd_S(double r);
double fd_Qneg(double r);

Report verify_main_identity(double a, double tol);        // a >= 1
Report verify_main_identity_imag(double r, double tol);   // a = sqrt(-r)
Report verify_lalin_identity(double p, double tol);
Report verify_theorem41_quadrature(double tol);
Report verify_gcomb(double tol);

} // namespace mmv
