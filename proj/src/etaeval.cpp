#include <cmath>
#include <numbers>

#include "mmv/qseries.hpp"

namespace mmv {

using cd = std::complex<double>;
static constexpr double PI = std::numbers::pi;

static cd eta_series(cd tau) {
    // q^(1/24) sum (-1)^k q^(k(3k-1)/2); only called with Im tau >= sqrt(3)/2
    cd q = std::exp(cd(0, 2 * PI) * tau);
    cd s = 1;
    for (int k = 1; k < 60; ++k) {
        cd t = std::pow(q, k * (3 * k - 1) / 2.0) + std::pow(q, k * (3 * k + 1) / 2.0);
        s += (k % 2 ? -1.0 : 1.0) * t;
        if (std::abs(t) < 1e-18) break;
    }
    return std::exp(cd(0, 2 * PI / 24) * tau) * s;
}

cd eta_eval(cd tau) {
    if (tau.imag() <= 0) throw std::domain_error("eta needs Im tau > 0");
    cd mult = 1;
    for (int it = 0; it < 200; ++it) {
        double n = std::round(tau.real());
        if (n != 0) {
            // eta(tau) = e^{i pi n/12} eta(tau - n)
            mult *= std::exp(cd(0, PI * n / 12));
            tau -= n;
        }
        if (std::norm(tau) < 1 - 1e-15) {
            // eta(tau) = eta(-1/tau) / sqrt(-i tau)
            mult /= std::sqrt(cd(0, -1) * tau);
            tau = -1.0 / tau;
        } else {
            break;
        }
    }
    if (tau.imag() < 0.5) throw std::runtime_error("eta reduction failed");
    return mult * eta_series(tau);
}

cd eval_xtilde(cd t) {
    auto e = [&](int d) { return eta_eval(double(d) * t); };
    return 2.0 * e(2) * e(6) * e(10) * e(30) / (e(1) * e(3) * e(5) * e(15));
}

cd eval_ytilde(cd t) {
    auto e = [&](int d) { return eta_eval(double(d) * t); };
    cd r = e(1) * e(5) * e(6) * e(30) / (e(2) * e(3) * e(10) * e(15));
    return -r * r;
}

const cd TAU1(-0.25, std::sqrt(15.0) / 60);
const cd TAU2(-1.0 / 6, std::sqrt(5.0) / 30);
const cd TAU3(1.0 / 6, std::sqrt(5.0) / 30);
const cd TAU4(0.25, std::sqrt(15.0) / 60);

cd geodesic_point(int i, double s) {
    // [t1,t2] and [t3,t4] lie on |tau -+ 1/5|^2 = 1/150, [t2,t3] on |tau|^2 = 1/30
    double c;
    cd a, b;
    switch (i) {
    case 1: c = -0.2; a = TAU1; b = TAU2; break;
    case 2: c = 0.0; a = TAU2; b = TAU3; break;
    case 3: c = 0.2; a = TAU3; b = TAU4; break;
    default: throw std::out_of_range("geodesic index must be 1, 2 or 3");
    }
    double r = std::abs(a - c);
    double th0 = std::arg(a - c), th1 = std::arg(b - c);
    double th = th0 + s * (th1 - th0);
    return cd(c + r * std::cos(th), r * std::sin(th));
}

Report check_geodesic_lemma(int samples) {
    if (samples < 3) throw std::invalid_argument("need at least 3 samples per arc");
    Stopwatch sw;
    double worst_mod = 0, worst_im = 0;
    for (int i = 1; i <= 3; ++i)
        for (int k = 0; k < samples; ++k) {
            cd t = geodesic_point(i, double(k) / (samples - 1));
            double dm = std::abs(std::abs(eval_xtilde(t)) - 1);
            double di = std::abs(eval_ytilde(t).imag());
            worst_mod = std::max(worst_mod, dm);
            worst_im = std::max(worst_im, di);
        }
    double worst = std::max(worst_mod, worst_im);
    auto r = make_report("geodesic/samples=" + std::to_string(samples),
                         "|x(tau)| = 1 and y(tau) real on the three arcs", worst, 0, 1e-8,
                         "max ||x|-1| = " + fmtg(worst_mod, 3) + ", max |Im y| = " +
                             fmtg(worst_im, 3) + "; eta by fundamental-domain reduction");
    r.seconds = sw.seconds();
    return r;
}

Report check_cm_values(double tol) {
    Stopwatch sw;
    cd x1 = eval_xtilde(TAU1), x4 = eval_xtilde(TAU4);
    cd y1 = eval_ytilde(TAU1), y4 = eval_ytilde(TAU4);
    cd ex1(-0.25, -std::sqrt(15.0) / 4), ex4 = std::conj(ex1);
    double d = std::max({std::abs(x1 - ex1), std::abs(x4 - ex4), std::abs(y1 + 1.0), std::abs(y4 + 1.0),
                         std::abs(x1 * x4 - 1.0), std::abs(x1 + x4 + 0.5)});
    std::ostringstream os;
    os.precision(12);
    os << "x(t1) = " << x1 << ", y(t1) = " << y1 << ", x(t4) = " << x4 << ", y(t4) = " << y4;
    auto r = make_report("cm-values", "x(t1) = (-1-sqrt(-15))/4, y(t1) = y(t4) = -1", d, 0, tol, os.str());
    r.seconds = sw.seconds();
    return r;
}

} // namespace mmv
