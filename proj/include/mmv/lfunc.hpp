#pragma once

#include <array>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mmv/ecurve.hpp"
#include "mmv/qseries.hpp"
#include "mmv/report.hpp"

namespace mmv {

struct NewformCoefficients {
    enum Source { EtaProduct, PointCount };
    std::vector<long> a; // a[0] unused, a[1] = 1
    int level = 0;
    Source source = EtaProduct;
    long nmax() const { return (long)a.size() - 1; }
};

// coefficients a[n] of q^n in prod eta(d tau)^e (integral order at infinity), n <= nmax
std::vector<long> eta_product_coeffs(const std::vector<std::pair<int, int>>& de, long nmax);

// eta(3t)eta(5t)eta(6t)eta(10t) - eta(t)eta(2t)eta(15t)eta(30t)
NewformCoefficients f30_coefficients(long nmax);
QSeriesQ f30_qseries(int order);
// weight-2 newforms of level 14, 20, 30, 36 as eta expressions
NewformCoefficients eta_newform(int level, long nmax);

struct CurveModel {
    std::string name;
    AInv rational;  // model of record
    AInv integral;  // minimal integral model
    Iso to_integral; // rational = transform^-1 ...: transform(rational, to_integral) == integral
    int conductor = 0; // expected value, checked through the functional equation
};

// E_a : Y^2 = X^3 + ((A^2 - 6A - 3)/4) X^2 + A X with A = a^2; throws for singular members
CurveModel curve_Ea(const Q& A, int conductor);
CurveModel curve_from_ainv(const std::string& name, const AInv& a, int conductor);

// p + 1 - #E(F_p) on the minimal model; valid for bad p too
long ap_point_count(const CurveModel& c, long p);
long ap_point_count(const AInv& integral_model, long p); // raw model, p of good reduction
NewformCoefficients curve_coefficients(const CurveModel& c, long nmax);

// Gamma(s, x) for real s >= 0, x > 0
double upper_gamma(double s, double x);

// smallest coefficient count for 1e-16 truncation at level N with split parameter up to amax
long required_terms(int level, double amax = 1.25);

// completed L evaluated with split parameter A; for the right sign this is independent of A
double lambda_split(const NewformCoefficients& f, double s, int eps, double A);
struct SignDetection {
    int eps = 0;
    double spread_plus = 0, spread_minus = 0; // |Lambda(A=1) - Lambda(A=1.25)| per sign
};
SignDetection detect_sign(const NewformCoefficients& f, double s = 1.3);

double L_value_weight2(const NewformCoefficients& f, int eps); // L(f, 2)
double L_prime_zero(const NewformCoefficients& f, int eps);    // L'(E, 0)

// Eisenstein part
Q rho_at_2_exact();
double rho_prime_2();
double zeta_real(double s);
double L_g_2();

// text cache of "n a_n" lines
void save_coefficients(const std::string& path, const NewformCoefficients& f);
NewformCoefficients load_coefficients(const std::string& path, int level);
// read from dir/level<N>.txt if long enough, else regenerate and write back
NewformCoefficients cached_newform(int level, long nmax, const std::string& dir);

// L'(E_N, 0) at level 14, 20, 30 or 36 from the eta form, sign detected
double L_prime_level(int level);

Report verify_ap_match(const CurveModel& c, long pmax);
Report verify_theorem14(double tol);
Report verify_corollary13_line(int line, double tol); // lines 1..7
Report verify_boyd30_line(int k, double tol);          // k = 3, 9, 24
Report verify_Lg2(double tol);
Report verify_rho2();
// m(P_{2,3}) = -L(f, 2)/(2 pi^2) with f the assembled BMZ form
Report verify_p23_bmz(double tol);

} // namespace mmv
