#include "mmv/latsum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "mmv/mahler.hpp"
#include "mmv/quad.hpp"

namespace mmv {

static constexpr double PI = std::numbers::pi;

LatticeSumSpec::LatticeSumSpec(mpq_class b_, mpq_class c_) : b(std::move(b_)), c(std::move(c_)) {
    if (b <= 0 || c <= 0) throw std::domain_error("F(b,c) needs b, c > 0");
}

mpq_class LatticeSumSpec::prefactor() const {
    mpq_class s = 1 + b + c + b * c;
    return s * s;
}

static double theta_direct(double x, int terms) {
    // x = w t
    double s = 0;
    for (int n = -terms; n <= terms; ++n) {
        double k = 6.0 * n + 1;
        s += (n % 2 ? -1.0 : 1.0) * std::exp(-x * k * k);
    }
    return s;
}

double theta_w(double w, double t, int terms) {
    // theta_w(t) = eta(i y) with y = 12 w t / pi, and eta(i y) = y^(-1/2) eta(i / y)
    double x = w * t, y = 12 * x / PI;
    if (y >= 1) return theta_direct(x, terms);
    return theta_direct(PI * PI / (144 * x), terms) / std::sqrt(y);
}

LatticeSumValue lattice_F(const LatticeSumSpec& s, double target_error, int theta_terms) {
    double b = s.b.get_d(), c = s.c.get_d(), pf = s.prefactor().get_d();
    auto f = [&](double t) {
        if (t <= 0) return 0.0;
        return t * theta_w(1, t, theta_terms) * theta_w(b, t, theta_terms) * theta_w(c, t, theta_terms) *
               theta_w(b * c, t, theta_terms);
    };
    double tol = target_error / pf;
    auto lo = tanh_sinh(f, 0, 1, tol);
    auto hi = exp_sinh(f, 1, tol);
    if (!lo.converged || !hi.converged) throw std::runtime_error("lattice sum quadrature did not converge");
    return {pf * (lo.value + hi.value), pf * (lo.error + hi.error)};
}

double lattice_F_brute(const LatticeSumSpec& s, int N) {
    double b = s.b.get_d(), c = s.c.get_d();
    std::vector<double> q;
    std::vector<int> sg;
    for (int n = -N; n <= N; ++n) {
        double k = 6.0 * n + 1;
        q.push_back(k * k);
        sg.push_back(n % 2 ? -1 : 1);
    }
    size_t L = q.size();
    double total = 0;
    for (size_t i = 0; i < L; ++i)
        for (size_t j = 0; j < L; ++j) {
            double ab = q[i] + b * q[j];
            for (size_t k = 0; k < L; ++k) {
                double abc = ab + c * q[k], sub = 0;
                int s3 = sg[i] * sg[j] * sg[k];
                for (size_t l = 0; l < L; ++l) {
                    double A = abc + b * c * q[l];
                    sub += sg[l] / (A * A);
                }
                total += s3 * sub;
            }
        }
    return s.prefactor().get_d() * total;
}

Report verify_rogers_yuttanan(double tol, const mpq_class& k) {
    Stopwatch sw;
    auto F1 = lattice_F({2, mpq_class(5, 3)}), F2 = lattice_F({2, 15});
    double rhs = 15 / (2 * PI * PI) * (F1.value - k.get_d() * F2.value);
    double m = m_Qk(3);
    auto r = make_report(k == mpq_class(1, 4) ? "rogers-yuttanan" : "rogers-yuttanan/k=" + k.get_str(),
                         "m(Q_3) = 15/(2 pi^2) (F(2,5/3) - " + k.get_str() + " F(2,15))", m, rhs, tol,
                         "F(2,5/3) = " + fmtg(F1.value, 14) + ", F(2,15) = " + fmtg(F2.value, 14) +
                             " by the theta integral");
    r.seconds = sw.seconds();
    return r;
}

Report verify_latsum_brute(double tol) {
    Stopwatch sw;
    double d = 0;
    std::string notes;
    for (auto spec : {LatticeSumSpec(2, mpq_class(5, 3)), LatticeSumSpec(2, 15)}) {
        double a = lattice_F(spec).value, b = lattice_F_brute(spec, 40);
        d = std::max(d, std::fabs(a - b));
        notes += "F(" + spec.b.get_str() + "," + spec.c.get_str() + "): theta " + fmtg(a, 12) + ", cube " +
                 fmtg(b, 12) + "; ";
    }
    auto r = make_report("latsum-brute", "theta integral = 4-fold sum over |n_i| <= 40", d, 0, tol,
                         notes + "max difference shown as lhs");
    r.seconds = sw.seconds();
    return r;
}

} // namespace mmv
