#include <doctest.h>

#include "mmv/bmz.hpp"
#include "mmv/lfunc.hpp"

using namespace mmv;
using C30 = Cyclotomic30;

TEST_CASE("cyclotomic field arithmetic") {
    CHECK(C30::zeta_pow(30) == C30(1));
    CHECK(C30::zeta_pow(15) == C30(-1));
    CHECK(C30::zeta_pow(7) * C30::zeta_pow(-7) == C30(1));
    C30 x = C30(2) + C30::zeta_pow(3) - C30::zeta_pow(11);
    CHECK(x * x.inverse() == C30(1));
    CHECK(std::abs(C30::zeta_pow(1).embed() - std::polar(1.0, 2 * 3.14159265358979323846 / 30)) < 1e-15);
    // sum of all 30th roots of unity is 0
    C30 s(0);
    for (int k = 0; k < 30; ++k) s = s + C30::zeta_pow(k);
    CHECK(s == C30(0));
}

TEST_CASE("e_{a,b}") {
    int N = 8;
    auto u = e_ab(1, 7, N), v = e_ab(-1, -7, N);
    for (int k = 0; k <= N; ++k) CHECK(u.at(Q(k)) + v.at(Q(k)) == C30(0));
    // (1 + z^15)/(1 - z^15) = 0, so the constant of e_{15,b} is half the second term only
    auto w = e_ab(15, 4, 2);
    C30 z4 = C30::zeta_pow(4);
    CHECK(w.at(Q(0)) == (C30(1) + z4) / (C30(1) - z4) * C30(Q(1, 2)));
    CHECK(e_ab(1, 1, 3).at(Q(1)) == C30::zeta_pow(2) - C30::zeta_pow(-2));
    CHECK_THROWS_AS(e_ab(30, 1, 3), std::domain_error);
}

TEST_CASE("f_{a,b;c}") {
    int N = 5;
    auto f = f_abc(1, 7, 9, N), g = f_abc(7, 1, 9, N);
    bool some_irrational = false;
    for (int k = 0; k <= N; ++k) {
        CHECK(f.at(Q(k)) + g.at(Q(k)) == C30(0));
        some_irrational = some_irrational || !f.at(Q(k)).is_rational();
    }
    CHECK(some_irrational);
    CHECK(f_abc(1, 1, 9, N).is_zero());
    CHECK_THROWS_AS(f_abc(5, 1, 6, N), std::domain_error);
}

TEST_CASE("assembled form") {
    static const int expect[12] = {1, -1, 1, -1, 13, -1, 0, -5, 1, -13, 4, -1};
    auto f = assemble_f(12);
    CHECK(f.at(Q(0)) == 0);
    for (int k = 1; k <= 12; ++k) CHECK(f.at(Q(k)) == -15 * expect[k - 1]);
    CHECK(f.at(Q(7)) == 0);
    CHECK(verify_bmz_f(12).pass);

    // the floating embedding of the same sum agrees
    auto ff = assemble_f_float(x0_ytilde_pair(), 12);
    for (int k = 1; k <= 12; ++k) CHECK(std::abs(ff[k] - f.at(Q(k)).get_d()) < 1e-9);
}

TEST_CASE("decomposition into newform and Eisenstein part") {
    CHECK(f_decomposition_rhs(12).at(Q(0)) == 0); // -45 + (5/24)6 + (175/24)6
    CHECK(verify_f_decomposition(12).pass);
    CHECK(verify_f_decomposition(24).pass);
    auto f30 = f30_qseries(12);
    CHECK(f30.at(Q(1)) == 1);
}
