#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mmv {

using Q = mpq_class;
using cplx = std::complex<double>;

double to_double(const Q& q);
std::string to_string(const Q& q);

// p + q*sqrt(d) with d squarefree, d != 1; d == 0 marks a plain rational
struct Surd {
    Q p = 0, q = 0;
    long d = 0;

    Surd() = default;
    Surd(const Q& r) : p(r) {}
    Surd(long v) : p(v) {}
    static Surd sqrt_of(long n); // sqrt(n) for any nonzero integer n, normalized

    bool is_rational() const { return q == 0; }
    bool is_zero() const { return p == 0 && q == 0; }
    cplx value() const;
    Surd conj() const; // p - q sqrt(d)
    Q norm() const;    // p^2 - q^2 d
};

Surd operator+(const Surd& a, const Surd& b);
Surd operator-(const Surd& a, const Surd& b);
Surd operator-(const Surd& a);
Surd operator*(const Surd& a, const Surd& b);
Surd inverse(const Surd& a);
bool operator==(const Surd& a, const Surd& b);
std::string to_string(const Surd& s);

enum class Domain { Rational, QuadraticSurd, ComplexFloat };
const char* domain_name(Domain d);

// exact surd, or a complex float when no exact form is available
class Coef {
    bool exact_ = true;
    Surd s_;
    cplx z_;

public:
    Coef() = default;
    Coef(long v) : s_(v) {}
    Coef(const Q& q) : s_(q) {}
    Coef(const Surd& s) : s_(s) {}
    Coef(cplx z) : exact_(false), z_(z) {}
    Coef(double x) : exact_(false), z_(x) {}

    bool exact() const { return exact_; }
    const Surd& surd() const { return s_; }
    bool is_rational() const { return exact_ && s_.is_rational(); }
    bool is_zero() const { return exact_ ? s_.is_zero() : z_ == cplx(0); }
    cplx value() const { return exact_ ? s_.value() : z_; }
    Domain domain() const;

    friend Coef operator+(const Coef& a, const Coef& b);
    friend Coef operator-(const Coef& a, const Coef& b);
    friend Coef operator*(const Coef& a, const Coef& b);
    friend Coef operator-(const Coef& a);
    friend bool operator==(const Coef& a, const Coef& b);
    Coef inverse() const;
};
std::string to_string(const Coef& c);

using Exp2 = std::pair<int, int>;

class LaurentPoly2 {
    std::map<Exp2, Coef> t_;

public:
    LaurentPoly2() = default;
    static LaurentPoly2 monomial(const Coef& c, int i, int j);
    static LaurentPoly2 constant(const Coef& c) { return monomial(c, 0, 0); }

    const std::map<Exp2, Coef>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    Coef coeff(int i, int j) const;
    void add_term(const Coef& c, int i, int j);
    Domain domain() const;

    LaurentPoly2 shifted(int di, int dj) const;
    LaurentPoly2 swap_xy() const;
    LaurentPoly2 invert_x() const;
    LaurentPoly2 scaled(const Coef& c) const;

    cplx eval(cplx x, cplx y) const;
    int min_y() const;
    int max_y() const;

    friend LaurentPoly2 operator+(const LaurentPoly2& a, const LaurentPoly2& b);
    friend LaurentPoly2 operator-(const LaurentPoly2& a, const LaurentPoly2& b);
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
    friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b);
};
std::string to_string(const LaurentPoly2& p);

// families
LaurentPoly2 build_Pac(const Coef& a, const Coef& c, bool clear_denominators = false);
LaurentPoly2 build_Qk(const Coef& k);
LaurentPoly2 build_Sr(const Coef& r);

// parse e.g. "2x + 2/x + y + 1/y + 3", "(1+x)(1+y)(x+y) - 3xy", "sqrt(-7)*x^-1"
LaurentPoly2 parse_laurent(const std::string& text);

struct Edge {
    Exp2 from, to;
    std::vector<Exp2> lattice; // from .. to inclusive, in walking order
};

struct NewtonPolygon {
    enum Kind { Point, Segment, Polygon } kind = Point;
    std::vector<Exp2> vertices; // clockwise
    std::vector<Edge> edges;
};

NewtonPolygon newton_polygon(const LaurentPoly2& p);
std::vector<Coef> edge_polynomial(const LaurentPoly2& p, const Edge& e);

struct TemperedWitness {
    size_t edge = 0;
    std::vector<Coef> edge_poly;
    cplx root;
};

struct TemperedResult {
    bool tempered = true;
    bool numeric_fallback = false; // true when some edge went through float roots
    std::vector<TemperedWitness> witnesses;
};

TemperedResult is_tempered(const LaurentPoly2& p);

// complex roots of sum c[k] t^k (companion matrix)
std::vector<cplx> poly_roots(const std::vector<cplx>& c);

} // namespace mmv
