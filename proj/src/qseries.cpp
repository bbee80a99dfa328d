#include "mmv/qseries.hpp"

namespace mmv {

QSeriesQ eta_qexp(int m, int order) {
    // pentagonal numbers k(3k-1)/2, k = 0, +-1, +-2, ...
    std::vector<Q> c(order + 1, Q(0));
    for (long k = 0;; ++k) {
        bool any = false;
        for (long kk : {k, -k}) {
            if (k == 0 && kk != 0) continue;
            long e = (long)m * kk * (3 * kk - 1) / 2;
            if (e <= order) {
                c[e] += (kk % 2 == 0) ? 1 : -1;
                any = true;
            }
            if (k == 0) break;
        }
        if (!any && k > 0) break;
    }
    return QSeriesQ(Q(m, 24), c);
}

QSeriesQ eta_qexp_naive(int m, int order) {
    std::vector<Q> c(order + 1, Q(0));
    c[0] = 1;
    for (int n = 1; (long)m * n <= order; ++n) {
        int s = m * n;
        for (int k = order; k >= s; --k) c[k] -= c[k - s];
    }
    return QSeriesQ(Q(m, 24), c);
}

QSeriesQ eta_quotient(const std::vector<std::pair<int, int>>& de, int order) {
    QSeriesQ r = QSeriesQ::one(order + 1);
    for (auto [d, e] : de) r = r * eta_qexp(d, order).pow(e);
    return r;
}

Q bernoulli2(const Q& x) { return x * x - x + Q(1, 6); }

QSeriesQ g_unit(int a, int order) {
    if (a < 1 || a > 15) throw std::domain_error("g_a needs 1 <= a <= 15");
    std::vector<Q> c(order + 1, Q(0));
    c[0] = 1;
    auto mul = [&](int s) {
        for (int k = order; k >= s; --k) c[k] -= c[k - s];
    };
    for (int n = 1; n <= order; ++n) {
        if ((n - a) % 30 == 0) mul(n);
        if ((n + a) % 30 == 0) mul(n);
    }
    Q lead = 15 * bernoulli2(Q(a, 30));
    lead.canonicalize();
    return QSeriesQ(lead, c);
}

const std::array<int, 8> UNIT_INDEX = {1, 3, 5, 7, 9, 11, 13, 15};
const ModularUnitSpec X0_SPEC = {{-1, -2, -2, -1, -2, -1, -1, -2}, 1};
const ModularUnitSpec YTILDE_SPEC = {{2, 0, 4, 2, 0, 2, 2, 0}, -1};

QSeriesQ unit_from_spec(const ModularUnitSpec& s, int order) {
    // a few spare terms absorb the negative leading exponents of the factors
    int work = order + 12;
    QSeriesQ r = QSeriesQ::one(work + 1);
    for (size_t i = 0; i < 8; ++i)
        if (s.e[i]) r = r * g_unit(UNIT_INDEX[i], work).pow(s.e[i]);
    if (s.sign < 0) r = -r;
    return r.truncated(r.lead + order + 1);
}

QSeriesQ unit_xtilde(int order) {
    int work = order + 4;
    auto r = eta_quotient({{2, 1}, {6, 1}, {10, 1}, {30, 1}, {1, -1}, {3, -1}, {5, -1}, {15, -1}}, work);
    return r.scaled(Q(2)).truncated(r.lead + order + 1);
}

QSeriesQ unit_x0(int order) { return unit_from_spec(X0_SPEC, order); }

QSeriesQ unit_ytilde(int order) {
    int work = order + 4;
    auto r = eta_quotient({{1, 2}, {5, 2}, {6, 2}, {30, 2}, {2, -2}, {3, -2}, {10, -2}, {15, -2}}, work);
    return (-r).truncated(r.lead + order + 1);
}

QSeriesQ unit_ytilde_g(int order) { return unit_from_spec(YTILDE_SPEC, order); }

QSeriesQ eisenstein_E2(int n, int order) {
    std::vector<Q> c(order + 1, Q(0));
    c[0] = 1;
    for (int m = 1; (long)n * m <= order; ++m) {
        long sigma = 0;
        for (int d = 1; d <= m; ++d)
            if (m % d == 0) sigma += d;
        c[n * m] = -24 * sigma;
    }
    return QSeriesQ(0, c);
}

QSeriesQ modular_equation_residual(int order, int c3) {
    int work = order + 4;
    auto G = eta_quotient({{1, 1}, {3, 1}, {5, 1}, {15, 1}}, work);
    auto x = unit_xtilde(work), y = unit_ytilde(work);
    auto one = QSeriesQ::one(work + 1);
    auto inner = (x + x.inverse()).scaled(Q(2)) + y + y.inverse() + one.scaled(Q(c3));
    return G * inner;
}

Report verify_modular_equation(int order, int c3) {
    Stopwatch sw;
    auto F = modular_equation_residual(order, c3);
    if (F.precision() <= order) throw std::runtime_error("modular equation: precision too low");
    long nonzero = 0;
    long first = -1;
    for (long k = 0; k <= order; ++k) {
        if (F.at(Q(k)) != 0) {
            ++nonzero;
            if (first < 0) first = k;
        }
    }
    std::string notes = "exact rational q-series through q^" + std::to_string(order);
    if (first >= 0) notes += "; first nonzero coefficient at q^" + std::to_string(first) + " = " +
                             F.at(Q(first)).get_str();
    auto r = exact_report("modular-equation/order=" + std::to_string(order) +
                              (c3 == 3 ? "" : "/c=" + std::to_string(c3)),
                          "2(x+1/x) + y + 1/y + 3 = 0 for the level-30 units", nonzero == 0,
                          (double)nonzero, notes);
    r.seconds = sw.seconds();
    return r;
}

} // namespace mmv
