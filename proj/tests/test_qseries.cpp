#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mmv/qseries.hpp"

using namespace mmv;
using cd = std::complex<double>;
static constexpr double PI = std::numbers::pi;

TEST_CASE("eta expansion") {
    auto e = eta_qexp(1, 60);
    CHECK(e.lead == Q(1, 24));
    auto naive = eta_qexp_naive(1, 60);
    for (int k = 0; k < 60; ++k) CHECK(e.at(Q(1, 24) + k) == naive.at(Q(1, 24) + k));
    // 1 - q - q^2 + q^5 + q^7 - ...
    CHECK(e.at(Q(1, 24)) == 1);
    CHECK(e.at(Q(1, 24) + 1) == -1);
    CHECK(e.at(Q(1, 24) + 2) == -1);
    CHECK(e.at(Q(1, 24) + 3) == 0);
    CHECK(e.at(Q(1, 24) + 5) == 1);
    CHECK(eta_qexp(2, 10).lead == Q(1, 12));

    // Delta = eta^24: q - 24 q^2 + 252 q^3 - 1472 q^4
    auto d = eta_quotient({{1, 24}}, 8);
    CHECK(d.lead == 1);
    CHECK(d.at(Q(1)) == 1);
    CHECK(d.at(Q(2)) == -24);
    CHECK(d.at(Q(3)) == 252);
    CHECK(d.at(Q(4)) == -1472);
    for (auto& x : d.c) CHECK(x.get_den() == 1);
}

TEST_CASE("Siegel-type units") {
    // 15 B2(a/30), B2(x) = x^2 - x + 1/6
    CHECK(g_unit(1, 5).lead == Q(121, 60));
    CHECK(g_unit(15, 5).lead == Q(-5, 4));
    CHECK(bernoulli2(Q(1, 2)) == Q(-1, 12));

    int N = 20;
    auto prod = g_unit(1, N) * g_unit(3, N).pow(2) * g_unit(5, N).pow(2) * g_unit(7, N) * g_unit(9, N).pow(2) *
                g_unit(11, N) * g_unit(13, N) * g_unit(15, N).pow(2);
    CHECK(prod.lead.get_den() == 1);
    auto inv = unit_x0(N).inverse();
    CHECK(prod.lead == inv.lead);
    for (int k = 0; k < 15; ++k) CHECK(prod.at(prod.lead + k) == inv.at(inv.lead + k));
}

TEST_CASE("x and y units") {
    int N = 30;
    auto xt = unit_xtilde(N), x0 = unit_x0(N);
    CHECK(xt.lead == x0.lead);
    for (int k = 0; k < 25; ++k) CHECK(xt.at(xt.lead + k) == 2 * x0.at(x0.lead + k));
    auto y = unit_ytilde(N), yg = unit_ytilde_g(N);
    CHECK(y.c[0] < 0);
    for (int k = 0; k < 25; ++k) CHECK(y.at(y.lead + k) == yg.at(yg.lead + k));
    auto one = xt * xt.inverse();
    CHECK(one.lead == 0);
    CHECK(one.c[0] == 1);
    for (size_t k = 1; k < one.c.size(); ++k) CHECK(one.c[k] == 0);
}

TEST_CASE("weight-2 Eisenstein series") {
    auto e = eisenstein_E2(1, 10);
    CHECK(e.at(Q(0)) == 1);
    CHECK(e.at(Q(1)) == -24);
    CHECK(e.at(Q(2)) == -72);
    CHECK(e.at(Q(3)) == -96);
    CHECK(e.at(Q(4)) == -168);
    auto e2 = eisenstein_E2(2, 10);
    for (int k = 1; k < 10; k += 2) CHECK(e2.at(Q(k)) == 0);
    auto c = eisenstein_E2(1, 10) - eisenstein_E2(2, 10).scaled(Q(4)) - eisenstein_E2(3, 10).scaled(Q(3)) +
             eisenstein_E2(6, 10).scaled(Q(12));
    CHECK(c.at(Q(0)) == 6); // 1 - 4 - 3 + 12
}

TEST_CASE("modular equation") {
    CHECK(verify_modular_equation(12).pass);
    CHECK(verify_modular_equation(24).pass);
    auto bad = modular_equation_residual(12, 0);
    REQUIRE_FALSE(bad.is_zero());
    CHECK(bad.lead == 1);
    CHECK(bad.c[0] == -3);
    CHECK_FALSE(verify_modular_equation(12, 0).pass);
}

TEST_CASE("eta evaluation") {
    double eta_i = std::tgamma(0.25) / (2 * std::pow(PI, 0.75));
    CHECK(std::abs(eta_eval(cd(0, 1)) - eta_i) < 1e-14);
    cd t(0.25, 1.0 / 3);
    CHECK(std::abs(eta_eval(-1.0 / t) - std::sqrt(cd(0, -1) * t) * eta_eval(t)) < 1e-12);
    cd t2(0.1, 0.7);
    CHECK(std::abs(eta_eval(t2 + 1.0) / eta_eval(t2) - std::exp(cd(0, PI / 12))) < 1e-13);
    // low in the half plane still reduces correctly
    cd t3(0.013, 0.02);
    CHECK(std::abs(eta_eval(-1.0 / t3) - std::sqrt(cd(0, -1) * t3) * eta_eval(t3)) < 1e-9 * std::abs(eta_eval(-1.0 / t3)));
}

TEST_CASE("values on the geodesic and at the CM points") {
    CHECK(check_geodesic_lemma(25).pass);
    cd mid = geodesic_point(2, 0.5);
    CHECK(std::fabs(std::norm(mid) - 1.0 / 30) < 1e-14);
    CHECK(std::fabs(std::abs(eval_xtilde(mid)) - 1) < 1e-8);
    CHECK(std::abs(eval_ytilde(TAU1) + 1.0) < 1e-8);
    CHECK(std::abs(eval_xtilde(TAU1) - cd(-0.25, -std::sqrt(15.0) / 4)) < 1e-8);
    CHECK(std::abs(eval_xtilde(TAU4) - cd(-0.25, std::sqrt(15.0) / 4)) < 1e-8);
    CHECK(check_cm_values(1e-8).pass);
}
