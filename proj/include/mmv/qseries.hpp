#pragma once

#include <array>
#include <complex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mmv/report.hpp"

namespace mmv {

using Q = mpq_class;

// sum_k c[k] q^(lead + k) + O(q^(lead + c.size())).  T needs +, -, *, / and == 0.
template <class T>
class QSeries {
public:
    Q lead = 0;
    std::vector<T> c;

    QSeries() = default;
    QSeries(Q l, std::vector<T> cs) : lead(std::move(l)), c(std::move(cs)) {
        lead.canonicalize();
        normalize();
    }

    static QSeries one(int len) {
        std::vector<T> v(len, T(0));
        v[0] = T(1);
        return QSeries(0, v);
    }

    Q precision() const { return lead + (long)c.size(); } // first unknown exponent
    bool is_zero() const { return c.empty(); }

    void normalize() {
        size_t k = 0;
        while (k < c.size() && c[k] == T(0)) ++k;
        if (k) {
            c.erase(c.begin(), c.begin() + k);
            lead += (long)k;
        }
    }

    // coefficient of q^e; throws past the known precision
    T at(const Q& e) const {
        if (e >= precision()) throw std::out_of_range("coefficient beyond truncation order");
        Q d = e - lead;
        if (d < 0 || d.get_den() != 1) return T(0);
        return c[d.get_num().get_si()];
    }

    QSeries scaled(const T& s) const {
        QSeries r = *this;
        for (auto& x : r.c) x = x * s;
        r.normalize();
        return r;
    }

    QSeries truncated(const Q& prec) const {
        QSeries r = *this;
        Q keep = prec - lead;
        if (keep < 0) keep = 0;
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), keep.get_num_mpz_t(), keep.get_den_mpz_t());
        long k = fl.get_si();
        if ((long)r.c.size() > k) r.c.resize(k);
        return r;
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        if (a.is_zero() && b.is_zero()) {
            QSeries r;
            r.lead = std::min(a.lead, b.lead);
            return r;
        }
        Q lo = std::min(a.lead, b.lead);
        Q prec = std::min(a.precision(), b.precision());
        Q span = prec - lo;
        if (Q(a.lead - b.lead).get_den() != 1 && !a.is_zero() && !b.is_zero())
            throw std::domain_error("adding series with incompatible exponents");
        long n = span < 0 ? 0 : span.get_num().get_si();
        std::vector<T> v(n, T(0));
        auto acc = [&](const QSeries& s) {
            Q off = s.lead - lo;
            long o = off.get_num().get_si();
            for (size_t k = 0; k < s.c.size() && o + (long)k < n; ++k) v[o + k] = v[o + k] + s.c[k];
        };
        acc(a);
        acc(b);
        QSeries r;
        r.lead = lo;
        r.c = std::move(v);
        r.normalize();
        return r;
    }
    friend QSeries operator-(const QSeries& a) { return a.scaled(T(-1)); }
    friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        QSeries r;
        r.lead = a.lead + b.lead;
        size_t n = std::min(a.c.size(), b.c.size());
        if (a.is_zero() || b.is_zero()) return r; // O(q^(lead_a + lead_b))
        r.c.assign(n, T(0));
        for (size_t i = 0; i < n; ++i) {
            if (a.c[i] == T(0)) continue;
            for (size_t j = 0; i + j < n; ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        }
        r.normalize();
        return r;
    }

    QSeries inverse() const {
        if (is_zero()) throw std::domain_error("inverse of a zero series");
        size_t n = c.size();
        std::vector<T> v(n, T(0));
        T inv0 = T(1) / c[0];
        v[0] = inv0;
        for (size_t k = 1; k < n; ++k) {
            T s(0);
            for (size_t j = 1; j <= k; ++j) s = s + c[j] * v[k - j];
            v[k] = T(0) - s * inv0;
        }
        return QSeries(-lead, v);
    }

    QSeries pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        QSeries r = one((int)c.size());
        QSeries b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
};

using QSeriesQ = QSeries<Q>;

// q^(m/24) prod (1 - q^(mn)), known through q^(m/24 + order)
QSeriesQ eta_qexp(int m, int order);
// same product, expanded naively (oracle for the pentagonal route)
QSeriesQ eta_qexp_naive(int m, int order);
// eta quotient prod eta(d tau)^e
QSeriesQ eta_quotient(const std::vector<std::pair<int, int>>& de, int order);

Q bernoulli2(const Q& x);
// g_a = q^(15 B2(a/30)) prod_{n = a mod 30} (1-q^n) prod_{n = -a mod 30} (1-q^n)
QSeriesQ g_unit(int a, int order);

// exponent vector over {1,3,5,7,9,11,13,15}
struct ModularUnitSpec {
    std::array<int, 8> e{};
    int sign = 1;
};
extern const std::array<int, 8> UNIT_INDEX;
extern const ModularUnitSpec X0_SPEC;     // x0 = prod g^(-e), e = (1,2,2,1,2,1,1,2)
extern const ModularUnitSpec YTILDE_SPEC; // ytilde = -prod g^n, n = (2,0,4,2,0,2,2,0)
QSeriesQ unit_from_spec(const ModularUnitSpec& s, int order);

QSeriesQ unit_xtilde(int order); // eta-quotient route
QSeriesQ unit_x0(int order);     // g_a route
QSeriesQ unit_ytilde(int order); // eta-quotient route
QSeriesQ unit_ytilde_g(int order);

QSeriesQ eisenstein_E2(int n, int order);

// G (2(x + 1/x) + y + 1/y + c3) with G = eta(t)eta(3t)eta(5t)eta(15t)
QSeriesQ modular_equation_residual(int order, int c3 = 3);
Report verify_modular_equation(int order, int c3 = 3);

template <class T>
std::string to_string(const QSeries<T>& s, int max_terms = 12) {
    std::ostringstream os;
    os << "q^{" << s.lead.get_str() << "}*(";
    int shown = 0;
    for (size_t k = 0; k < s.c.size() && shown < max_terms; ++k) {
        if (s.c[k] == T(0)) continue;
        std::ostringstream t;
        t << s.c[k];
        std::string v = t.str();
        if (v.find(' ', 1) != std::string::npos) v = "(" + v + ")"; // multi-term coefficient
        if (shown) os << (v[0] == '-' ? " - " : " + ");
        else if (v[0] == '-') os << "-";
        if (v[0] == '-') v = v.substr(1);
        bool unit = (v == "1" && k > 0);
        if (!unit) os << v << (k ? " " : "");
        if (k == 1) os << "q";
        else if (k > 1) os << "q^" << k;
        ++shown;
    }
    if (!shown) os << "0";
    os << " + O(q^" << s.c.size() << "))";
    return os.str();
}

// ---- numerics in the upper half plane

std::complex<double> eta_eval(std::complex<double> tau);
std::complex<double> eval_xtilde(std::complex<double> tau);
std::complex<double> eval_ytilde(std::complex<double> tau);

extern const std::complex<double> TAU1, TAU2, TAU3, TAU4;
// point on the geodesic [tau_i, tau_{i+1}] at fraction s in [0,1] (i = 1,2,3)
std::complex<double> geodesic_point(int i, double s);

Report check_geodesic_lemma(int samples);
Report check_cm_values(double tol);

} // namespace mmv
