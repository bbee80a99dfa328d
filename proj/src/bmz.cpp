#include "mmv/bmz.hpp"

#include <sstream>
#include <stdexcept>

#include "mmv/lfunc.hpp"

namespace mmv {

using C30 = Cyclotomic30;

static bool div30(long x) { return x % 30 == 0; }

QSeriesC e_ab(int a, int b, int order) {
    if (div30(a) || div30(b)) throw std::domain_error("e_{a,b} needs a, b not divisible by 30");
    auto half_cot = [](int k) {
        C30 z = C30::zeta_pow(k);
        return (C30(1) + z) / (C30(1) - z);
    };
    std::vector<C30> c(order + 1, C30(0));
    c[0] = (half_cot(a) + half_cot(b)) * C30(mpq_class(1, 2));
    for (int m = 1; m <= order; ++m)
        for (int n = 1; m * n <= order; ++n) {
            long e = (long)a * m + (long)b * n;
            c[m * n] = c[m * n] + C30::zeta_pow(e) - C30::zeta_pow(-e);
        }
    return QSeriesC(0, c);
}

QSeriesC f_abc(int a, int b, int c, int order) {
    if (div30((long)a * c) || div30((long)b * c) || div30(a) || div30(b))
        throw std::domain_error("f_{a,b;c} needs 30 not dividing a, b, ac, bc");
    auto u = e_ab(a, b * c, order) * e_ab(b, -a * c, order);
    auto v = e_ab(a, -b * c, order) * e_ab(b, a * c, order);
    return u - v;
}

BilinearUnitPair x0_ytilde_pair() {
    BilinearUnitPair p;
    for (size_t i = 0; i < 8; ++i) {
        p.left[UNIT_INDEX[i]] = X0_SPEC.e[i];
        p.right[UNIT_INDEX[i]] = YTILDE_SPEC.e[i];
    }
    p.cusp = 9;
    return p;
}

static std::vector<C30> assemble_raw(const BilinearUnitPair& pr, int order) {
    std::vector<C30> acc(order + 1, C30(0));
    for (int a = 1; a <= 15; ++a)
        for (int b = 1; b <= 15; ++b) {
            long w = (long)pr.left[a] * pr.right[b];
            if (!w) continue;
            auto f = f_abc(a, b, pr.cusp, order);
            C30 cw{mpq_class(w)};
            for (int k = 0; k <= order; ++k) acc[k] = acc[k] + cw * f.at(Q(k));
        }
    return acc;
}

QSeriesQ assemble_f(const BilinearUnitPair& pr, int order) {
    auto acc = assemble_raw(pr, order);
    std::vector<Q> c(order + 1, Q(0));
    for (int k = 1; k <= order; ++k) {
        if (!acc[k].is_rational()) {
            std::ostringstream os;
            os << "assembled coefficient of q^" << k << " is not rational: " << acc[k];
            throw std::runtime_error(os.str());
        }
        c[k] = acc[k].rational_part() / 4;
    }
    return QSeriesQ(0, c); // constant term dropped
}

QSeriesQ assemble_f(int order) { return assemble_f(x0_ytilde_pair(), order); }

std::vector<std::complex<double>> assemble_f_float(const BilinearUnitPair& pr, int order) {
    // same bilinear sum, but with every zeta power embedded as a complex float from the start
    const double tp = 2 * 3.14159265358979323846 / 30;
    auto z = [&](long k) { return std::polar(1.0, tp * (double)(k % 30)); };
    auto e = [&](int a, int b) {
        std::vector<std::complex<double>> c(order + 1);
        c[0] = 0.5 * ((1.0 + z(a)) / (1.0 - z(a)) + (1.0 + z(b)) / (1.0 - z(b)));
        for (int m = 1; m <= order; ++m)
            for (int n = 1; m * n <= order; ++n) {
                long x = (long)a * m + (long)b * n;
                c[m * n] += z(x) - z(-x);
            }
        return c;
    };
    auto mul = [&](const auto& u, const auto& v) {
        std::vector<std::complex<double>> r(order + 1);
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order; ++j) r[i + j] += u[i] * v[j];
        return r;
    };
    std::vector<std::complex<double>> acc(order + 1);
    int c = pr.cusp;
    for (int a = 1; a <= 15; ++a)
        for (int b = 1; b <= 15; ++b) {
            long w = (long)pr.left[a] * pr.right[b];
            if (!w) continue;
            auto u = mul(e(a, b * c), e(b, -a * c));
            auto v = mul(e(a, -b * c), e(b, a * c));
            for (int k = 0; k <= order; ++k) acc[k] += (double)w * (u[k] - v[k]) / 4.0;
        }
    acc[0] = 0;
    return acc;
}

QSeriesQ f_decomposition_rhs(int order) {
    auto E = [&](int n) { return eisenstein_E2(n, order); };
    auto one = QSeriesQ::one(order + 1);
    auto e1 = E(1) - E(2).scaled(Q(4)) - E(3).scaled(Q(3)) + E(6).scaled(Q(12));
    auto e5 = E(5) - E(10).scaled(Q(4)) - E(15).scaled(Q(3)) + E(30).scaled(Q(12));
    return f30_qseries(order).scaled(Q(-10)) + e1.scaled(Q(5, 24)) + e5.scaled(Q(175, 24)) - one.scaled(Q(45));
}

Report verify_bmz_f(int order) {
    if (order < 12) throw std::invalid_argument("order must be at least 12");
    Stopwatch sw;
    static const int expect[12] = {1, -1, 1, -1, 13, -1, 0, -5, 1, -13, 4, -1};
    auto f = assemble_f(order);
    long bad = 0;
    std::ostringstream os;
    os << "q^1..q^12:";
    for (int k = 1; k <= 12; ++k) {
        Q v = f.at(Q(k));
        os << ' ' << v.get_str();
        if (v != -15 * expect[k - 1]) ++bad;
    }
    auto r = exact_report("bmz-f/order=" + std::to_string(order),
                          "f = -15(q - q^2 + q^3 - q^4 + 13q^5 - ...)", bad == 0, (double)bad, os.str());
    r.seconds = sw.seconds();
    return r;
}

Report verify_f_decomposition(int order) {
    if (order < 12) throw std::invalid_argument("order must be at least 12");
    Stopwatch sw;
    auto f = assemble_f(order);
    auto g = f_decomposition_rhs(order);
    long bad = 0, first = -1;
    for (int k = 0; k <= order; ++k)
        if (f.at(Q(k)) != g.at(Q(k))) {
            if (first < 0) first = k;
            ++bad;
        }
    std::string notes = "coefficients q^0..q^" + std::to_string(order) +
                        "; rhs constant term " + g.at(Q(0)).get_str();
    if (first >= 0) notes += "; first mismatch at q^" + std::to_string(first);
    auto r = exact_report("f-decomposition/order=" + std::to_string(order),
                          "f = -10 f30 + Eisenstein combination - 45", bad == 0, (double)bad, notes);
    r.seconds = sw.seconds();
    return r;
}

} // namespace mmv
