#include "mmv/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mmv {

using cd = std::complex<double>;

namespace {

const double ERRTOL = 1e-4; // series tail ~ ERRTOL^6

double mag(double x) { return std::fabs(x); }
double mag(cd x) { return std::abs(x); }

template <class T>
T rf_impl(T x, T y, T z) {
    for (int it = 0; it < 200; ++it) {
        T sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        T lam = sx * (sy + sz) + sy * sz;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        T ave = (x + y + z) / 3.0;
        T dx = (ave - x) / ave, dy = (ave - y) / ave, dz = (ave - z) / ave;
        if (std::max({mag(dx), mag(dy), mag(dz)}) < ERRTOL) {
            T e2 = dx * dy - dz * dz, e3 = dx * dy * dz;
            return (1.0 + (e2 / 24.0 - 0.1 - 3.0 / 44.0 * e3) * e2 + e3 / 14.0) / std::sqrt(ave);
        }
    }
    throw std::runtime_error("carlson_rf: no convergence");
}

template <class T>
T rd_impl(T x, T y, T z) {
    const double C1 = 3.0 / 14, C2 = 1.0 / 6, C3 = 9.0 / 22, C4 = 3.0 / 26, C5 = 0.25 * C3,
                 C6 = 1.5 * C4;
    T sum = 0;
    double fac = 1;
    for (int it = 0; it < 200; ++it) {
        T sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        T lam = sx * (sy + sz) + sy * sz;
        sum += fac / (sz * (z + lam));
        fac *= 0.25;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        T ave = 0.2 * (x + y + 3.0 * z);
        T dx = (ave - x) / ave, dy = (ave - y) / ave, dz = (ave - z) / ave;
        if (std::max({mag(dx), mag(dy), mag(dz)}) < ERRTOL) {
            T ea = dx * dy, eb = dz * dz, ec = ea - eb, ed = ea - 6.0 * eb, ee = ed + ec + ec;
            return 3.0 * sum +
                   fac * (1.0 + ed * (-C1 + C5 * ed - C6 * dz * ee) +
                          dz * (C2 * ee + dz * (-C3 * ec + dz * C4 * ea))) /
                       (ave * std::sqrt(ave));
        }
    }
    throw std::runtime_error("carlson_rd: no convergence");
}

// p must not be a negative real here
template <class T>
T rj_impl(T x, T y, T z, T p) {
    const double C1 = 3.0 / 14, C2 = 1.0 / 3, C3 = 3.0 / 22, C4 = 3.0 / 26, C5 = 0.75 * C3,
                 C6 = 1.5 * C4, C7 = 0.5 * C2, C8 = C3 + C3;
    T sum = 0;
    double fac = 1;
    for (int it = 0; it < 200; ++it) {
        T sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
        T lam = sx * (sy + sz) + sy * sz;
        T alpha = p * (sx + sy + sz) + sx * sy * sz;
        alpha *= alpha;
        T beta = p * (p + lam) * (p + lam);
        sum += fac * rf_impl<T>(alpha, beta, beta); // R_C(alpha, beta)
        fac *= 0.25;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        p = 0.25 * (p + lam);
        T ave = 0.2 * (x + y + z + p + p);
        T dx = (ave - x) / ave, dy = (ave - y) / ave, dz = (ave - z) / ave, dp = (ave - p) / ave;
        if (std::max({mag(dx), mag(dy), mag(dz), mag(dp)}) < ERRTOL) {
            T ea = dx * (dy + dz) + dy * dz, eb = dx * dy * dz, ec = dp * dp;
            T ed = ea - 3.0 * ec, ee = eb + 2.0 * dp * (ea - ec);
            return 3.0 * sum + fac *
                                   (1.0 + ed * (-C1 + C5 * ed - C6 * ee) + eb * (C7 + dp * (-C8 + dp * C4)) +
                                    dp * ea * (C2 - dp * C3) - C2 * dp * ec) /
                                   (ave * std::sqrt(ave));
        }
    }
    throw std::runtime_error("carlson_rj: no convergence");
}

} // namespace

double carlson_rf(double x, double y, double z) {
    if (std::min({x, y, z}) < 0) throw std::domain_error("carlson_rf: negative argument");
    return rf_impl<double>(x, y, z);
}
double carlson_rd(double x, double y, double z) {
    if (std::min(x, y) < 0 || z <= 0) throw std::domain_error("carlson_rd: bad argument");
    return rd_impl<double>(x, y, z);
}
double carlson_rc(double x, double y) {
    if (x < 0 || y == 0) throw std::domain_error("carlson_rc: bad argument");
    if (y < 0) return std::sqrt(x / (x - y)) * rf_impl<double>(x - y, -y, -y);
    return rf_impl<double>(x, y, y);
}
double carlson_rj(double x, double y, double z, double p) {
    if (std::min({x, y, z}) < 0 || p == 0) throw std::domain_error("carlson_rj: bad argument");
    if (p > 0) return rj_impl<double>(x, y, z, p);
    // principal value for p < 0, reduced to a positive fourth argument
    double xt = std::min({x, y, z}), zt = std::max({x, y, z}), yt = x + y + z - xt - zt;
    double a = 1.0 / (yt - p);
    double b = a * (zt - yt) * (yt - xt);
    double pt = yt + b;
    double rho = xt * zt / yt, tau = p * pt / yt;
    double rcx = carlson_rc(rho, tau);
    double ans = rj_impl<double>(xt, yt, zt, pt);
    return a * (b * ans + 3.0 * (rcx - rf_impl<double>(xt, yt, zt)));
}

cd carlson_rf(cd x, cd y, cd z) { return rf_impl<cd>(x, y, z); }
cd carlson_rd(cd x, cd y, cd z) { return rd_impl<cd>(x, y, z); }
cd carlson_rj(cd x, cd y, cd z, cd p) { return rj_impl<cd>(x, y, z, p); }

// ---------- K, E, Pi

EllipticValue ellipK(double z) {
    double az = std::fabs(z);
    if (az == 1) throw std::domain_error("K(1) diverges");
    if (az > 1) return {ellipK(1 / az).value / az, EllipticValue::RealPartReflection};
    return {carlson_rf(0, 1 - z * z, 1), EllipticValue::Principal};
}

EllipticValue ellipE(double z) {
    double az = std::fabs(z);
    if (az > 1) {
        double k = 1 / az;
        return {az * (ellipE(k).value - (1 - k * k) * ellipK(k).value), EllipticValue::RealPartReflection};
    }
    if (az == 1) return {1.0, EllipticValue::Principal};
    double k2 = z * z;
    return {carlson_rf(0, 1 - k2, 1) - k2 / 3 * carlson_rd(0, 1 - k2, 1), EllipticValue::Principal};
}

EllipticValue ellipPi(double n, double z) {
    double az = std::fabs(z);
    if (n == 1) throw std::domain_error("Pi(1, z) diverges");
    if (az == 1) throw std::domain_error("Pi(n, 1) diverges");
    if (az > 1) {
        // analytic continuation across |z| = 1; the residue at x^2 = 1/n contributes
        // half its value when 1 < n < z^2
        double v = ellipPi(n / (az * az), 1 / az).value / az;
        if (n > 1 && n < az * az) v -= M_PI * std::sqrt(n) / (2 * std::sqrt((n - 1) * (az * az - n)));
        return {v, EllipticValue::RealPartReflection};
    }
    if (n == 0) return {carlson_rf(0, 1 - z * z, 1), EllipticValue::Principal};
    double k2 = z * z;
    return {carlson_rf(0, 1 - k2, 1) + n / 3 * carlson_rj(0, 1 - k2, 1, 1 - n), EllipticValue::Principal};
}

cd ellipK(cd z) { return carlson_rf(cd(0), 1.0 - z * z, cd(1)); }
cd ellipE(cd z) {
    cd k2 = z * z;
    return carlson_rf(cd(0), 1.0 - k2, cd(1)) - k2 / 3.0 * carlson_rd(cd(0), 1.0 - k2, cd(1));
}
cd ellipPi(cd n, cd z) {
    cd k2 = z * z;
    return carlson_rf(cd(0), 1.0 - k2, cd(1)) + n / 3.0 * carlson_rj(cd(0), 1.0 - k2, cd(1), 1.0 - n);
}

// ---------- 2F1

double hyp2f1_series(double a, double b, double c, double z) {
    if (std::fabs(z) >= 1) throw std::domain_error("hyp2f1_series: |z| >= 1");
    double term = 1, sum = 1;
    for (int k = 0; k < 5000; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) return sum;
    }
    throw std::runtime_error("hyp2f1_series: no convergence");
}

double hyp2f1_third(double z) {
    const double a = 1.0 / 3, b = 2.0 / 3;
    if (z >= 1) throw std::domain_error("hyp2f1_third: z >= 1");
    if (std::fabs(z) <= 0.5) return hyp2f1_series(a, b, 1, z);
    if (z > 0) {
        // a + b = c: logarithmic expansion about z = 1
        const double gamma = 0.57721566490153286061;
        const double s3 = std::sqrt(3.0);
        double psi1 = -gamma;
        double psia = -gamma - M_PI / (2 * s3) - 1.5 * std::log(3.0);
        double psib = -gamma + M_PI / (2 * s3) - 1.5 * std::log(3.0);
        double w = 1 - z, lw = std::log(w);
        double coef = 1, wk = 1, sum = 0;
        for (int k = 0; k < 2000; ++k) {
            double t = coef * wk * (2 * psi1 - psia - psib - lw);
            sum += t;
            if (k > 2 && std::fabs(t) < 1e-18 * std::fabs(sum)) break;
            coef *= (a + k) * (b + k) / ((k + 1.0) * (k + 1.0));
            wk *= w;
            psi1 += 1.0 / (k + 1);
            psia += 1.0 / (a + k);
            psib += 1.0 / (b + k);
        }
        return std::sin(M_PI / 3) / M_PI * sum;
    }
    // z < -1/2: Pfaff to w = z/(z-1) in (1/3, 1)
    double w = z / (z - 1);
    double pre = std::pow(1 - z, -a);
    if (w <= 0.5) return pre * hyp2f1_series(a, a, 1, w);
    // 2F1(1/3,1/3;1;w) continued to 1-w
    double g1 = std::tgamma(1.0 / 3) / (std::tgamma(2.0 / 3) * std::tgamma(2.0 / 3));
    double g2 = std::tgamma(-1.0 / 3) / (std::tgamma(1.0 / 3) * std::tgamma(1.0 / 3));
    double u = 1 - w;
    return pre * (g1 * hyp2f1_series(a, a, 2.0 / 3, u) +
                  std::cbrt(u) * g2 * hyp2f1_series(b, b, 4.0 / 3, u));
}

// ---------- parameter families

ModulusPair real_family_mn(double a) {
    if (a <= 1 || a == 3) throw std::domain_error("need a in (1,3) or (3,inf)");
    return {std::sqrt(16 * a / ((a - 1) * (a - 1) * (a - 1) * (a + 3))), 4 * a / ((a - 1) * (a + 3))};
}

ModulusPair imag_family_mn(double p) {
    if (!(p > 0 && p < 1)) throw std::domain_error("need p in (0,1)");
    return {std::sqrt(p * p * p * (2 + p) / (1 + 2 * p)), -p * p / (1 + 2 * p)};
}

double r_from_p(double p) { return (1 - p) * (2 + p) / (p * (1 + p)); }

double p_from_r(double r) {
    if (!(r > 0)) throw std::domain_error("need r > 0");
    double s = r + 1;
    return (-s + std::sqrt(s * s + 8 * s)) / (2 * s);
}

double kp_residual(double a) {
    auto [m, n] = real_family_mn(a);
    double lhs = ellipPi(n, m).value - (a + 3) / (3 * (a + 1)) * ellipK(m).value;
    double rhs = M_PI / 3 * std::sqrt((a - 1) * (a - 1) * (a - 1) * (a + 3)) / ((a + 1) * (a - 3));
    return lhs - rhs;
}

double com3_residual(double p) {
    auto [m, n] = imag_family_mn(p);
    double lhs = ellipPi(n, m).value - (2 + p) * (1 + 2 * p) / (3 * (1 + p) * (1 + p)) * ellipK(m).value;
    double rhs = M_PI / 6 * std::sqrt(1 + 2 * p) / ((1 + p) * (1 + p));
    return lhs - rhs;
}

Report verify_KP(double a, double tol) {
    Stopwatch sw;
    auto [m, n] = real_family_mn(a);
    double lhs = ellipPi(n, m).value - (a + 3) / (3 * (a + 1)) * ellipK(m).value;
    double rhs = M_PI / 3 * std::sqrt((a - 1) * (a - 1) * (a - 1) * (a + 3)) / ((a + 1) * (a - 3));
    std::ostringstream os;
    os.precision(17);
    os << "a=" << a << " m=" << m << " n=" << n << "; Carlson forms"
       << (m > 1 ? ", real part via reflection" : "");
    auto r = make_report("kp/a=" + std::to_string(a), "K-Pi identity", lhs, rhs, tol, os.str());
    r.seconds = sw.seconds();
    return r;
}

Report verify_com3(double p, double tol) {
    Stopwatch sw;
    auto [m, n] = imag_family_mn(p);
    double lhs = ellipPi(n, m).value - (2 + p) * (1 + 2 * p) / (3 * (1 + p) * (1 + p)) * ellipK(m).value;
    double rhs = M_PI / 6 * std::sqrt(1 + 2 * p) / ((1 + p) * (1 + p));
    std::ostringstream os;
    os.precision(17);
    os << "p=" << p << " m=" << m << " n=" << n << "; Carlson forms";
    auto r = make_report("com3/p=" + std::to_string(p), "K-Pi identity, imaginary family", lhs, rhs,
                         tol, os.str());
    r.seconds = sw.seconds();
    return r;
}

} // namespace mmv
