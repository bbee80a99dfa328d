#include "mmv/checks.hpp"

#include <cmath>

#include "mmv/bmz.hpp"
#include "mmv/ecurve.hpp"
#include "mmv/elliptic.hpp"
#include "mmv/latsum.hpp"
#include "mmv/lfunc.hpp"
#include "mmv/mahler.hpp"
#include "mmv/qseries.hpp"
#include "mmv/regulator.hpp"

namespace mmv {

Report verify_lemma23(double a, double tol_a, double tol_fd) {
    Stopwatch sw;
    double dH = dH_da(a), dG = dG_da(a), dGh = dG_da_hyp(a);
    double res = std::max(std::fabs(1.5 * dH - dG - 1 / a), std::fabs(dG - dGh));
    double fd = std::max(std::fabs(dH - fd_H(a)), std::fabs(dG - fd_G(a)));
    auto r = make_report("lemma23/a=" + fmtg(a), "(3/2) H'(a) - G'(a) = 1/a", res, 0, tol_a,
                         "finite-difference gap " + fmtg(fd, 3) + " (tol " + fmtg(tol_fd, 3) +
                             "); G' by elliptic K and by 2F1(1/3,2/3;1)");
    r.pass = r.pass && fd < tol_fd;
    r.seconds = sw.seconds();
    return r;
}

Report verify_lemma28(double rr, double tol_a, double tol_fd) {
    Stopwatch sw;
    double dS = dSr_dr(rr), dQ = dQ_dr(rr);
    double res = std::fabs(dS - 4.0 / 3 * dQ + 1 / (3 * rr));
    double fd = std::max(std::fabs(dS - fd_S(rr)), std::fabs(dQ - fd_Qneg(rr)));
    auto r = make_report("lemma28/r=" + fmtg(rr), "S_r' = (4/3) d/dr m(Q_{-r-1}) - 1/(3r)", res, 0, tol_a,
                         "finite-difference gap " + fmtg(fd, 3) + " (tol " + fmtg(tol_fd, 3) + ")");
    r.pass = r.pass && fd < tol_fd;
    r.seconds = sw.seconds();
    return r;
}

template <class F>
static NamedCheck one(std::string id, int k, F f) {
    return {std::move(id), k, [f] { return std::vector<Report>{f()}; }};
}

static std::vector<NamedCheck> build() {
    std::vector<NamedCheck> v;
    // 1
    for (double a : {1.0, 1.5, 2.0, 2.5, 4.0, 6.0})
        v.push_back(one("main-identity/a=" + fmtg(a), 1, [a] { return verify_main_identity(a, 1e-6); }));
    for (double r : {0.5, 1.0, 3.0, 7.0})
        v.push_back(one("main-identity/a=sqrt(-" + fmtg(r) + ")", 1,
                        [r] { return verify_main_identity_imag(r, 1e-6); }));
    // 2
    v.push_back({"kp", 2, [] {
                     std::vector<Report> out;
                     for (int i = 0; i < 20; ++i) {
                         double a = i < 10 ? 1.05 + 0.19 * i : 3.2 + 1.7 * (i - 10);
                         out.push_back(verify_KP(a, 1e-12));
                     }
                     return out;
                 }});
    v.push_back({"com3", 2, [] {
                     std::vector<Report> out;
                     for (int i = 1; i <= 20; ++i) out.push_back(verify_com3(i / 21.0, 1e-12));
                     return out;
                 }});
    // 3
    v.push_back({"derivatives", 3, [] {
                     std::vector<Report> out;
                     for (double a : {1.5, 2.0, 5.0}) out.push_back(verify_lemma23(a, 1e-8, 1e-5));
                     for (double r : {1.5, 3.0, 7.0}) out.push_back(verify_lemma28(r, 1e-8, 1e-5));
                     return out;
                 }});
    // 4
    v.push_back(one("modular-equation", 4, [] { return verify_modular_equation(12); }));
    // 5
    v.push_back(one("bmz-f", 5, [] { return verify_bmz_f(12); }));
    v.push_back(one("f-decomposition", 5, [] { return verify_f_decomposition(12); }));
    // 6
    v.push_back(one("L(g,2)", 6, [] { return verify_Lg2(1e-12); }));
    v.push_back(one("rho(2)", 6, [] { return verify_rho2(); }));
    // 7
    v.push_back(one("theorem14", 7, [] { return verify_theorem14(1e-6); }));
    v.push_back(one("ap/E_2", 7, [] { return verify_ap_match(curve_Ea(4, 30), 50); }));
    // 8
    for (int k = 1; k <= 7; ++k)
        v.push_back(one("corollary13/line=" + std::to_string(k), 8, [k] { return verify_corollary13_line(k, 1e-6); }));
    // 9
    for (int k : {3, 9, 24})
        v.push_back(one("boyd30/k=" + std::to_string(k), 9, [k] { return verify_boyd30_line(k, 1e-6); }));
    v.push_back(one("theorem41/quadrature", 9, [] { return verify_theorem41_quadrature(1e-6); }));
    v.push_back(one("theorem41/ledger", 9, [] { return verify_theorem41_ledger(); }));
    // 10
    v.push_back(one("cm-values", 10, [] { return check_cm_values(1e-8); }));
    v.push_back(one("geodesic", 10, [] { return check_geodesic_lemma(25); }));
    // 11
    for (Q al : {Q(3), Q(9), Q(24), Q(-1, 3), Q(-8, 3)})
        v.push_back(one("mellit/alpha=" + al.get_str(), 11, [al] { return verify_mellit(al, 1e-3, 2000); }));
    // 12
    v.push_back(one("rogers-yuttanan", 12, [] { return verify_rogers_yuttanan(1e-5); }));
    v.push_back(one("latsum-brute", 12, [] { return verify_latsum_brute(1e-4); }));
    // supplementary
    v.push_back(one("p23-bmz", 0, [] { return verify_p23_bmz(1e-6); }));
    v.push_back(one("theorem15-chain", 0, [] { return verify_theorem15_chain(1e-6); }));
    v.push_back(one("gcomb", 0, [] { return verify_gcomb(1e-6); }));
    for (double p : {0.5, 1.0, 2.0})
        v.push_back(one("lalin/p=" + fmtg(p), 0, [p] { return verify_lalin_identity(p, 1e-6); }));
    v.push_back(one("birational-maps", 0, [] { return verify_birational_maps(20); }));
    for (int A : {4, 10, 25})
        v.push_back(one("j-from-periods/A=" + std::to_string(A), 0,
                        [A] { return verify_j_from_periods(Q(A), 1e-8); }));
    v.push_back({"ap/table", 0, [] {
                     std::vector<Report> out;
                     struct Row { long A; int N; };
                     for (auto [A, N] : {Row{10, 30}, Row{25, 30}, Row{2, 14}, Row{8, 14}, Row{-7, 14}, Row{5, 20},
                                         Row{-1, 20}, Row{3, 36}, Row{-3, 36}})
                         out.push_back(verify_ap_match(curve_Ea(Q(A), N), 200));
                     return out;
                 }});
    return v;
}

const std::vector<NamedCheck>& all_checks() {
    static const std::vector<NamedCheck> v = build();
    return v;
}

static Report crashed(const std::string& id, const std::exception& e) {
    Report r;
    r.id = id;
    r.anchor = "check raised an exception";
    r.pass = false;
    r.notes = e.what();
    return r;
}

static void run_into(const NamedCheck& c, std::vector<Report>& out) {
    try {
        for (auto& r : c.run()) out.push_back(std::move(r));
    } catch (const std::exception& e) {
        out.push_back(crashed(c.id, e));
    }
}

std::vector<Report> run_criterion(int k) {
    std::vector<Report> out;
    for (auto& c : all_checks())
        if (c.criterion == k) run_into(c, out);
    return out;
}

std::vector<Report> run_all() {
    std::vector<Report> out;
    for (auto& c : all_checks()) run_into(c, out);
    return out;
}

} // namespace mmv
