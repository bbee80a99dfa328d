#include "mmv/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

namespace mmv {

double to_double(const Q& q) { return q.get_d(); }

std::string to_string(const Q& q) { return q.get_str(); }

// ---------- Surd

Surd Surd::sqrt_of(long n) {
    if (n == 0) return Surd();
    long s = 1, d = n < 0 ? -1 : 1;
    long m = std::labs(n);
    for (long f = 2; f * f <= m; ++f) {
        while (m % (f * f) == 0) m /= f * f, s *= f;
    }
    d *= m;
    Surd r;
    if (d == 1) {
        r.p = s;
        return r;
    }
    r.q = s;
    r.d = d;
    return r;
}

cplx Surd::value() const {
    cplx root = d >= 0 ? cplx(std::sqrt((double)d), 0) : cplx(0, std::sqrt((double)-d));
    return cplx(p.get_d(), 0) + q.get_d() * root;
}

Surd Surd::conj() const {
    Surd r = *this;
    r.q = -r.q;
    return r;
}

Q Surd::norm() const { return p * p - q * q * d; }

static long common_d(const Surd& a, const Surd& b) {
    if (a.q == 0) return b.d;
    if (b.q == 0) return a.d;
    if (a.d != b.d) throw std::domain_error("surds from different quadratic fields");
    return a.d;
}

static Surd tidy(Surd s) {
    if (s.q == 0) s.d = 0;
    return s;
}

Surd operator+(const Surd& a, const Surd& b) {
    Surd r;
    r.d = common_d(a, b);
    r.p = a.p + b.p;
    r.q = a.q + b.q;
    return tidy(r);
}
Surd operator-(const Surd& a) {
    Surd r = a;
    r.p = -r.p;
    r.q = -r.q;
    return r;
}
Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }
Surd operator*(const Surd& a, const Surd& b) {
    Surd r;
    r.d = common_d(a, b);
    r.p = a.p * b.p + a.q * b.q * r.d;
    r.q = a.p * b.q + a.q * b.p;
    return tidy(r);
}
Surd inverse(const Surd& a) {
    Q n = a.norm();
    if (n == 0) throw std::domain_error("inverse of zero");
    Surd c = a.conj();
    c.p /= n;
    c.q /= n;
    return tidy(c);
}
bool operator==(const Surd& a, const Surd& b) {
    return a.p == b.p && a.q == b.q && (a.q == 0 || a.d == b.d);
}

std::string to_string(const Surd& s) {
    if (s.q == 0) return s.p.get_str();
    std::string rad = "sqrt(" + std::to_string(s.d) + ")";
    std::string qs = s.q == 1 ? rad : (s.q == -1 ? "-" + rad : s.q.get_str() + "*" + rad);
    if (s.p == 0) return qs;
    if (qs[0] == '-') return "(" + s.p.get_str() + qs + ")";
    return "(" + s.p.get_str() + "+" + qs + ")";
}

// ---------- Coef

const char* domain_name(Domain d) {
    switch (d) {
    case Domain::Rational: return "rational";
    case Domain::QuadraticSurd: return "quadratic-surd";
    default: return "complex-float";
    }
}

Domain Coef::domain() const {
    if (!exact_) return Domain::ComplexFloat;
    return s_.is_rational() ? Domain::Rational : Domain::QuadraticSurd;
}

Coef operator+(const Coef& a, const Coef& b) {
    if (a.exact_ && b.exact_) return Coef(a.s_ + b.s_);
    return Coef(a.value() + b.value());
}
Coef operator-(const Coef& a) { return a.exact_ ? Coef(-a.s_) : Coef(-a.z_); }
Coef operator-(const Coef& a, const Coef& b) { return a + (-b); }
Coef operator*(const Coef& a, const Coef& b) {
    if (a.exact_ && b.exact_) return Coef(a.s_ * b.s_);
    return Coef(a.value() * b.value());
}
bool operator==(const Coef& a, const Coef& b) {
    if (a.exact_ && b.exact_) return a.s_ == b.s_;
    return a.value() == b.value();
}
Coef Coef::inverse() const {
    if (exact_) return Coef(mmv::inverse(s_));
    return Coef(1.0 / z_);
}

std::string to_string(const Coef& c) {
    if (c.exact()) return to_string(c.surd());
    std::ostringstream os;
    os.precision(17);
    cplx z = c.value();
    if (z.imag() == 0) os << z.real();
    else os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
    return os.str();
}

// ---------- LaurentPoly2

LaurentPoly2 LaurentPoly2::monomial(const Coef& c, int i, int j) {
    LaurentPoly2 p;
    p.add_term(c, i, j);
    return p;
}

Coef LaurentPoly2::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? Coef(0L) : it->second;
}

void LaurentPoly2::add_term(const Coef& c, int i, int j) {
    auto key = Exp2{i, j};
    auto it = t_.find(key);
    if (it == t_.end()) {
        if (!c.is_zero()) t_.emplace(key, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
}

Domain LaurentPoly2::domain() const {
    Domain d = Domain::Rational;
    for (auto& [e, c] : t_) d = std::max(d, c.domain());
    return d;
}

LaurentPoly2 LaurentPoly2::shifted(int di, int dj) const {
    LaurentPoly2 r;
    for (auto& [e, c] : t_) r.t_.emplace(Exp2{e.first + di, e.second + dj}, c);
    return r;
}

LaurentPoly2 LaurentPoly2::swap_xy() const {
    LaurentPoly2 r;
    for (auto& [e, c] : t_) r.t_.emplace(Exp2{e.second, e.first}, c);
    return r;
}

LaurentPoly2 LaurentPoly2::invert_x() const {
    LaurentPoly2 r;
    for (auto& [e, c] : t_) r.t_.emplace(Exp2{-e.first, e.second}, c);
    return r;
}

LaurentPoly2 LaurentPoly2::scaled(const Coef& k) const {
    LaurentPoly2 r;
    for (auto& [e, c] : t_) r.add_term(c * k, e.first, e.second);
    return r;
}

cplx LaurentPoly2::eval(cplx x, cplx y) const {
    cplx s = 0;
    for (auto& [e, c] : t_) s += c.value() * std::pow(x, e.first) * std::pow(y, e.second);
    return s;
}

int LaurentPoly2::min_y() const {
    int m = INT32_MAX;
    for (auto& [e, c] : t_) m = std::min(m, e.second);
    return m;
}
int LaurentPoly2::max_y() const {
    int m = INT32_MIN;
    for (auto& [e, c] : t_) m = std::max(m, e.second);
    return m;
}

LaurentPoly2 operator+(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 r = a;
    for (auto& [e, c] : b.t_) r.add_term(c, e.first, e.second);
    return r;
}
LaurentPoly2 operator-(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 r = a;
    for (auto& [e, c] : b.t_) r.add_term(-c, e.first, e.second);
    return r;
}
LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 r;
    for (auto& [e1, c1] : a.t_)
        for (auto& [e2, c2] : b.t_) r.add_term(c1 * c2, e1.first + e2.first, e1.second + e2.second);
    return r;
}
bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (auto& [e, c] : a.t_) {
        auto it = b.t_.find(e);
        if (it == b.t_.end() || !(it->second == c)) return false;
    }
    return true;
}

static std::string mono(const char* v, int k) {
    if (k == 0) return "";
    if (k == 1) return v;
    return std::string(v) + "^" + std::to_string(k);
}

std::string to_string(const LaurentPoly2& p) {
    if (p.is_zero()) return "0";
    // descending total degree reads most naturally
    std::vector<std::pair<Exp2, Coef>> v(p.terms().begin(), p.terms().end());
    std::stable_sort(v.begin(), v.end(), [](auto& a, auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::string out;
    for (auto& [e, c] : v) {
        std::string m = mono("x", e.first);
        std::string my = mono("y", e.second);
        if (!m.empty() && !my.empty()) m += "*";
        m += my;
        std::string cs = to_string(c);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        std::string term;
        if (m.empty()) term = cs;
        else if (cs == "1") term = m;
        else term = cs + "*" + m;
        if (out.empty()) out = neg ? "-" + term : term;
        else out += (neg ? " - " : " + ") + term;
    }
    return out;
}

// ---------- families

LaurentPoly2 build_Pac(const Coef& a, const Coef& c, bool clear_denominators) {
    if (a.is_zero()) throw std::domain_error("P_{a,c} needs a != 0");
    LaurentPoly2 p;
    p.add_term(a, 1, 0);
    p.add_term(a, -1, 0);
    p.add_term(Coef(1L), 0, 1);
    p.add_term(Coef(1L), 0, -1);
    p.add_term(c, 0, 0);
    if (clear_denominators) p = p.shifted(1, 1);
    return p;
}

LaurentPoly2 build_Qk(const Coef& k) {
    auto one = LaurentPoly2::constant(Coef(1L));
    auto X = LaurentPoly2::monomial(Coef(1L), 1, 0);
    auto Y = LaurentPoly2::monomial(Coef(1L), 0, 1);
    return (one + X) * (one + Y) * (X + Y) - LaurentPoly2::monomial(k, 1, 1);
}

LaurentPoly2 build_Sr(const Coef& r) {
    if (r.is_zero()) throw std::domain_error("S_r needs r > 0");
    if (std::abs(r.value().imag()) > 0 || !(r.value().real() > 0))
        throw std::domain_error("S_r needs r > 0");
    LaurentPoly2 w;
    w.add_term(Coef(1L), 1, 0);
    w.add_term(Coef(1L), -1, 0);
    w.add_term(-(r + Coef(1L)), 0, 0);
    LaurentPoly2 b = (w * w).scaled(r.inverse()) + LaurentPoly2::constant(Coef(2L));
    return LaurentPoly2::monomial(Coef(1L), 0, 2) + b.shifted(0, 1) + LaurentPoly2::constant(Coef(1L));
}

// ---------- parser

namespace {

struct Parser {
    std::string s;
    size_t i = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("parse error at " + std::to_string(i) + ": " + msg);
    }
    void ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    char peek() {
        ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    long integer() {
        ws();
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
        ws();
        size_t st = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (st == i) fail("integer expected");
        long v = std::stol(s.substr(st, i - st));
        return neg ? -v : v;
    }
    Q number() {
        size_t st = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        Q v(i == st ? std::string("0") : s.substr(st, i - st));
        if (i < s.size() && s[i] == '.') {
            ++i;
            size_t fs = i;
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            std::string frac = s.substr(fs, i - fs);
            if (!frac.empty()) {
                mpz_class den = 1;
                for (size_t k = 0; k < frac.size(); ++k) den *= 10;
                v += Q(mpz_class(frac), den);
            }
        }
        v.canonicalize();
        return v;
    }
    bool starts_atom() {
        char c = peek();
        return std::isdigit((unsigned char)c) || c == 'x' || c == 'y' || c == 'i' || c == '(' ||
               c == 's' || c == '.';
    }
    LaurentPoly2 atom() {
        char c = peek();
        if (std::isdigit((unsigned char)c) || c == '.') return LaurentPoly2::constant(Coef(number()));
        if (c == 'x') return ++i, LaurentPoly2::monomial(Coef(1L), 1, 0);
        if (c == 'y') return ++i, LaurentPoly2::monomial(Coef(1L), 0, 1);
        if (c == '(') {
            ++i;
            auto e = expr();
            if (!eat(')')) fail("')' expected");
            return e;
        }
        if (s.compare(i, 4, "sqrt") == 0) {
            i += 4;
            if (!eat('(')) fail("'(' expected after sqrt");
            long n = integer();
            if (!eat(')')) fail("')' expected");
            return LaurentPoly2::constant(Coef(Surd::sqrt_of(n)));
        }
        if (c == 'i') return ++i, LaurentPoly2::constant(Coef(Surd::sqrt_of(-1)));
        fail(std::string("unexpected '") + c + "'");
    }
    static bool is_monomial(const LaurentPoly2& p) { return p.size() == 1; }
    LaurentPoly2 power() {
        auto a = atom();
        if (eat('^')) {
            long k = integer();
            if (k < 0) {
                if (!is_monomial(a)) fail("negative power of a non-monomial");
                a = invert(a);
                k = -k;
            }
            auto r = LaurentPoly2::constant(Coef(1L));
            for (long j = 0; j < k; ++j) r = r * a;
            return r;
        }
        return a;
    }
    LaurentPoly2 invert(const LaurentPoly2& m) {
        if (!is_monomial(m)) fail("division by a non-monomial");
        auto& [e, c] = *m.terms().begin();
        return LaurentPoly2::monomial(c.inverse(), -e.first, -e.second);
    }
    LaurentPoly2 unary() {
        if (eat('-')) return unary().scaled(Coef(-1L));
        if (eat('+')) return unary();
        return power();
    }
    LaurentPoly2 term() {
        auto a = unary();
        for (;;) {
            if (eat('*')) a = a * unary();
            else if (eat('/')) a = a * invert(unary());
            else if (starts_atom()) a = a * power();
            else return a;
        }
    }
    LaurentPoly2 expr() {
        auto a = term();
        for (;;) {
            if (eat('+')) a = a + term();
            else if (eat('-')) a = a - term();
            else return a;
        }
    }
};

} // namespace

LaurentPoly2 parse_laurent(const std::string& text) {
    Parser p{text};
    auto r = p.expr();
    if (p.peek() != '\0') p.fail("trailing input");
    return r;
}

// ---------- Newton polygon

static long cross(Exp2 o, Exp2 a, Exp2 b) {
    return (long)(a.first - o.first) * (b.second - o.second) -
           (long)(a.second - o.second) * (b.first - o.first);
}

static Edge make_edge(Exp2 a, Exp2 b) {
    Edge e{a, b, {}};
    int dx = b.first - a.first, dy = b.second - a.second;
    int g = std::gcd(std::abs(dx), std::abs(dy));
    for (int k = 0; k <= g; ++k) e.lattice.push_back({a.first + k * dx / g, a.second + k * dy / g});
    return e;
}

NewtonPolygon newton_polygon(const LaurentPoly2& p) {
    if (p.is_zero()) throw std::domain_error("Newton polygon of the zero polynomial");
    std::vector<Exp2> pts;
    for (auto& [e, c] : p.terms()) pts.push_back(e);
    std::sort(pts.begin(), pts.end());
    NewtonPolygon np;
    if (pts.size() == 1) {
        np.kind = NewtonPolygon::Point;
        np.vertices = pts;
        return np;
    }
    // monotone chain gives counterclockwise order
    std::vector<Exp2> h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    std::reverse(h.begin(), h.end());
    np.vertices = h;
    if (h.size() == 2) {
        np.kind = NewtonPolygon::Segment;
        np.edges.push_back(make_edge(h[0], h[1]));
        np.edges.push_back(make_edge(h[1], h[0]));
        return np;
    }
    np.kind = NewtonPolygon::Polygon;
    for (size_t i = 0; i < h.size(); ++i) np.edges.push_back(make_edge(h[i], h[(i + 1) % h.size()]));
    return np;
}

std::vector<Coef> edge_polynomial(const LaurentPoly2& p, const Edge& e) {
    std::vector<Coef> c;
    for (auto& pt : e.lattice) c.push_back(p.coeff(pt.first, pt.second));
    return c;
}

// ---------- temperedness

std::vector<cplx> poly_roots(const std::vector<cplx>& c0) {
    std::vector<cplx> c = c0;
    while (!c.empty() && c.back() == cplx(0)) c.pop_back();
    size_t lead = 0;
    while (lead < c.size() && c[lead] == cplx(0)) ++lead;
    std::vector<cplx> roots(lead, cplx(0));
    c.erase(c.begin(), c.begin() + lead);
    int n = (int)c.size() - 1;
    if (n <= 0) return roots;
    if (n == 1) {
        roots.push_back(-c[0] / c[1]);
        return roots;
    }
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) M(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) M(i, n - 1) = -c[i] / c[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M, false);
    for (int i = 0; i < n; ++i) roots.push_back(es.eigenvalues()(i));
    return roots;
}

namespace {

using QPoly = std::vector<Q>; // ascending coefficients

void trim(QPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a = q*b + r; returns true when r == 0 and writes q into a
bool divides_out(QPoly& a, const QPoly& b) {
    if (a.size() < b.size()) return false;
    QPoly r = a, q(a.size() - b.size() + 1);
    for (size_t k = q.size(); k-- > 0;) {
        Q f = r[k + b.size() - 1] / b.back();
        q[k] = f;
        for (size_t j = 0; j < b.size(); ++j) r[k + j] -= f * b[j];
    }
    trim(r);
    if (!r.empty()) return false;
    a = q;
    return true;
}

QPoly cyclotomic(int d) {
    QPoly p(d + 1);
    p[0] = -1;
    p[d] = 1;
    for (int e = 1; e < d; ++e)
        if (d % e == 0) divides_out(p, cyclotomic(e));
    return p;
}

bool is_root_of_unity(cplx z, int cap) {
    if (std::fabs(std::abs(z) - 1) >= 1e-9) return false;
    cplx w = 1;
    for (int d = 1; d <= cap; ++d) {
        w *= z;
        if (std::abs(w - cplx(1)) < 1e-9) return true;
    }
    return false;
}

} // namespace

TemperedResult is_tempered(const LaurentPoly2& p) {
    TemperedResult res;
    auto np = newton_polygon(p);
    for (size_t ei = 0; ei < np.edges.size(); ++ei) {
        auto ep = edge_polynomial(p, np.edges[ei]);
        bool rational = std::all_of(ep.begin(), ep.end(), [](const Coef& c) { return c.is_rational(); });
        std::vector<cplx> bad;
        if (rational) {
            QPoly a;
            for (auto& c : ep) a.push_back(c.surd().p);
            int deg = (int)a.size() - 1;
            for (int d = 1; d <= 2 * deg * deg; ++d) {
                auto phi = cyclotomic(d);
                while (a.size() > 1 && divides_out(a, phi)) {}
            }
            if (a.size() > 1) {
                std::vector<cplx> ca;
                for (auto& q : a) ca.push_back(q.get_d());
                bad = poly_roots(ca);
            }
        } else {
            res.numeric_fallback = true;
            std::vector<cplx> ca;
            for (auto& c : ep) ca.push_back(c.value());
            for (auto z : poly_roots(ca))
                if (!is_root_of_unity(z, 360)) bad.push_back(z);
        }
        for (auto z : bad) {
            res.tempered = false;
            res.witnesses.push_back({ei, ep, z});
        }
    }
    return res;
}

} // namespace mmv
