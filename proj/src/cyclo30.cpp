#include "mmv/cyclo30.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace mmv {

using C30 = Cyclotomic30;

// reduce a polynomial of degree <= 14 using z^8 = -z^7 + z^5 + z^4 + z^3 - z - 1
static C30 reduce(std::array<mpq_class, 15> w) {
    static const int low[8] = {-1, -1, 0, 1, 1, 1, 0, -1};
    for (int d = 14; d >= 8; --d) {
        if (w[d] == 0) continue;
        mpq_class t = w[d];
        w[d] = 0;
        for (int k = 0; k < 8; ++k)
            if (low[k]) w[d - 8 + k] += low[k] * t;
    }
    C30 r;
    for (int k = 0; k < 8; ++k) r.v[k] = w[k];
    return r;
}

C30 C30::zeta_pow(long k) {
    k %= 30;
    if (k < 0) k += 30;
    static std::array<C30, 30> table = [] {
        std::array<C30, 30> t;
        t[0] = C30(1);
        for (int j = 1; j < 30; ++j) {
            std::array<mpq_class, 15> w{};
            for (int i = 0; i < 8; ++i) w[i + 1] = t[j - 1].v[i];
            t[j] = reduce(w);
        }
        return t;
    }();
    return table[k];
}

bool C30::is_rational() const {
    for (int k = 1; k < 8; ++k)
        if (v[k] != 0) return false;
    return true;
}

std::complex<double> C30::embed() const {
    std::complex<double> z = std::polar(1.0, 2 * std::numbers::pi / 30), p = 1, s = 0;
    for (int k = 0; k < 8; ++k, p *= z) s += v[k].get_d() * p;
    return s;
}

C30 operator+(const C30& a, const C30& b) {
    C30 r;
    for (int k = 0; k < 8; ++k) r.v[k] = a.v[k] + b.v[k];
    return r;
}
C30 operator-(const C30& a, const C30& b) {
    C30 r;
    for (int k = 0; k < 8; ++k) r.v[k] = a.v[k] - b.v[k];
    return r;
}
C30 operator-(const C30& a) { return C30(0) - a; }

C30 operator*(const C30& a, const C30& b) {
    if (a.is_rational()) {
        C30 r;
        for (int k = 0; k < 8; ++k) r.v[k] = a.v[0] * b.v[k];
        return r;
    }
    std::array<mpq_class, 15> w{};
    for (int i = 0; i < 8; ++i) {
        if (a.v[i] == 0) continue;
        for (int j = 0; j < 8; ++j)
            if (b.v[j] != 0) w[i + j] += a.v[i] * b.v[j];
    }
    return reduce(w);
}

C30 C30::inverse() const {
    // columns of the multiplication-by-this matrix are this * z^j; solve M x = e_0
    std::array<std::array<mpq_class, 9>, 8> m;
    for (int j = 0; j < 8; ++j) {
        C30 col = *this * zeta_pow(j);
        for (int i = 0; i < 8; ++i) m[i][j] = col.v[i];
    }
    for (int i = 0; i < 8; ++i) m[i][8] = (i == 0);
    for (int c = 0; c < 8; ++c) {
        int piv = c;
        while (piv < 8 && m[piv][c] == 0) ++piv;
        if (piv == 8) throw std::domain_error("inverse of zero in Q(zeta_30)");
        std::swap(m[c], m[piv]);
        for (int i = 0; i < 8; ++i) {
            if (i == c || m[i][c] == 0) continue;
            mpq_class f = m[i][c] / m[c][c];
            for (int k = c; k < 9; ++k) m[i][k] -= f * m[c][k];
        }
    }
    C30 r;
    for (int i = 0; i < 8; ++i) r.v[i] = m[i][8] / m[i][i];
    return r;
}

std::ostream& operator<<(std::ostream& os, const C30& a) {
    std::ostringstream t;
    bool any = false;
    for (int k = 0; k < 8; ++k) {
        if (a.v[k] == 0) continue;
        std::string s = a.v[k].get_str();
        if (any) t << (s[0] == '-' ? " - " : " + ");
        else if (s[0] == '-') t << "-";
        if (s[0] == '-') s = s.substr(1);
        if (k == 0 || s != "1") t << s << (k ? "*" : "");
        if (k == 1) t << "z";
        else if (k > 1) t << "z^" << k;
        any = true;
    }
    if (!any) t << "0";
    return os << t.str();
}

} // namespace mmv
