#pragma once

#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mmv/report.hpp"

namespace mmv {

using Q = mpq_class;

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
using AInv = std::array<Q, 5>; // a1 a2 a3 a4 a6

// Silverman change of variables X = u^2 x + r, Y = u^3 y + s u^2 x + t
struct Iso {
    Q u = 1, r = 0, s = 0, t = 0;
};

AInv transform(const AInv& a, const Iso& w); // invariants in the (x, y) coordinates
Iso compose(const Iso& first, const Iso& second);
Q discriminant(const AInv& a);
Q c4_of(const AInv& a);
Q c6_of(const AInv& a);
Q b2_of(const AInv& a);
Q j_invariant(const AInv& a);

// C_alpha : Y^2 = X(X^2 + (alpha^2 - 4 alpha - 8) X + 16(alpha + 1))
AInv curve_C(const Q& alpha);
// y^2 + 7xy + 9y = x^3, the model on which the paper lists the torsion of C_9
AInv curve_M9();
// the isomorphism M9 -> C_9 (M9 coordinates are the "old" ones)
Iso iso_M9_to_C9();

struct CurvePoint {
    bool inf = false;
    Q x = 0, y = 0;
    static CurvePoint O() { return CurvePoint{true, 0, 0}; }
    static CurvePoint at(const Q& x, const Q& y) { return CurvePoint{false, x, y}; }
};
bool operator==(const CurvePoint& a, const CurvePoint& b);
bool operator<(const CurvePoint& a, const CurvePoint& b);
std::string to_string(const CurvePoint& p);

bool on_curve(const AInv& a, const CurvePoint& p);
CurvePoint negate(const AInv& a, const CurvePoint& p);
CurvePoint add(const AInv& a, const CurvePoint& p, const CurvePoint& q);
CurvePoint multiply(const AInv& a, long n, const CurvePoint& p);
// order of p if at most maxn, else 0
int point_order(const AInv& a, const CurvePoint& p, int maxn = 16);
// old coordinates -> new coordinates of transform(a, w), and back
CurvePoint iso_forward(const Iso& w, const CurvePoint& p);
CurvePoint iso_backward(const Iso& w, const CurvePoint& p);
// all sums of multiples of the generators (each must be torsion)
std::vector<CurvePoint> torsion_span(const AInv& a, const std::vector<CurvePoint>& gens);
std::vector<CurvePoint> rational_two_torsion(const AInv& a);

// ---- polynomials and rational functions in X, Y

struct BiPoly {
    std::map<std::pair<int, int>, Q> c; // X^i Y^j
    static BiPoly X();
    static BiPoly Y();
    static BiPoly constant(const Q& v);
    bool is_zero() const { return c.empty(); }
    void clean();
};
BiPoly operator+(const BiPoly& a, const BiPoly& b);
BiPoly operator-(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const Q& k, const BiPoly& b);
// unique representative A(X) + B(X) Y modulo the curve equation
BiPoly reduce_mod(const AInv& a, const BiPoly& p);
// order at O of a polynomial function (<= 0)
long order_at_O(const AInv& a, const BiPoly& p);

struct RatFn {
    BiPoly num, den;
};
RatFn ratfn(const BiPoly& n, const BiPoly& d = BiPoly::constant(1));
RatFn operator+(const RatFn& a, const RatFn& b);
RatFn operator-(const RatFn& a, const RatFn& b);
RatFn operator*(const RatFn& a, const RatFn& b);
RatFn operator/(const RatFn& a, const RatFn& b);
// f(X, Y) with X, Y replaced by rational functions
RatFn substitute(const RatFn& f, const RatFn& X, const RatFn& Y);
bool is_zero_on(const AInv& a, const RatFn& f);
// value at an affine point; nullopt-like flag when the denominator vanishes
bool eval_at(const RatFn& f, const CurvePoint& p, Q& out);

// x and y of Q_alpha as functions on C_alpha, and X, Y as functions of (x, y)
RatFn qalpha_x(const Q& alpha);
RatFn qalpha_y(const Q& alpha);
RatFn qalpha_X_of_xy(const Q& alpha);
RatFn qalpha_Y_of_xy(const Q& alpha);
// Q_alpha(x, y) = (1+x)(1+y)(x+y) - alpha x y as a polynomial in x, y (read X as x, Y as y)
BiPoly qalpha_poly(const Q& alpha);

// ---- divisors

using Divisor = std::map<CurvePoint, long>;

struct UnresolvedSupport : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long degree(const Divisor& d);
Divisor operator+(const Divisor& a, const Divisor& b);
Divisor operator-(const Divisor& a, const Divisor& b);
Divisor operator*(long k, const Divisor& d);
Divisor point_divisor(std::initializer_list<std::pair<long, CurvePoint>> terms);

// order of vanishing at an affine point by exact local expansion
long local_order(const AInv& a, const BiPoly& f, const CurvePoint& p);
// zeros and poles, searching only the candidate points; UnresolvedSupport if the zero
// count does not account for the full degree
Divisor divisor_of_function(const AInv& a, const RatFn& f, const std::vector<CurvePoint>& candidates);

// class modulo [-P] ~ -[P]: O and 2-torsion drop out, one representative per pair
Divisor sign_class(const AInv& a, const Divisor& d);
Divisor diamond(const AInv& a, const Divisor& d1, const Divisor& d2);
// Abel sum of a divisor
CurvePoint abel_sum(const AInv& a, const Divisor& d);

// names iP + jQ for printing; prefers the representative with the smaller multiple of P
struct PointNamer {
    AInv a;
    std::vector<std::pair<CurvePoint, std::string>> names;
    std::vector<std::pair<CurvePoint, int>> rank; // smaller is preferred
    PointNamer(const AInv& a, const CurvePoint& P, int ordP, const CurvePoint* Qp);
    std::string name(const CurvePoint& p) const;
    int pref(const CurvePoint& p) const;
};
// "9(2P) + 6(2P+Q) - 6(P)" style
std::string pretty(const Divisor& d, const PointNamer& nm, bool signed_class = true);

// (x) <> (y) on C_alpha, exact
Divisor xy_diamond(const Q& alpha, std::string* pretty_out = nullptr);

Report verify_theorem41_ledger();
Report verify_birational_maps(int samples);

} // namespace mmv
