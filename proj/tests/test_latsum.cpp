#include <doctest.h>

#include <cmath>

#include "mmv/latsum.hpp"
#include "mmv/qseries.hpp"

using namespace mmv;

TEST_CASE("theta factor") {
    // theta_w(t) = eta(i 12 w t / pi)
    for (double t : {0.01, 0.2, 0.5, 3.0})
        CHECK(std::fabs(theta_w(1.7, t) - eta_eval({0, 12 * 1.7 * t / 3.14159265358979323846}).real()) < 1e-14);
    double prev = 1;
    for (double t : {5.0, 10.0, 20.0}) {
        double v = std::fabs(theta_w(2, t));
        CHECK(v < prev);
        CHECK(v < 2 * std::exp(-2 * t));
        prev = v;
    }
}

TEST_CASE("F(b,c)") {
    LatticeSumSpec s1(2, mpq_class(5, 3)), s2(2, 15);
    auto a = lattice_F(s1), b = lattice_F(s2);
    CHECK(std::fabs(lattice_F({mpq_class(5, 3), 2}).value - a.value) < 1e-12);
    CHECK(std::fabs(lattice_F({15, 2}).value - b.value) < 1e-12);
    CHECK(std::fabs(lattice_F(s1, 1e-14, 24).value - a.value) < 1e-8);
    CHECK(std::fabs(lattice_F_brute(s1, 40) - a.value) < 1e-4);
    CHECK(std::fabs(lattice_F_brute(s2, 40) - b.value) < 1e-4);
    CHECK(s1.prefactor() == 64);
    CHECK_THROWS(LatticeSumSpec(0, 1));
}

TEST_CASE("Rogers-Yuttanan") {
    CHECK(verify_rogers_yuttanan(1e-5).pass);
    CHECK_FALSE(verify_rogers_yuttanan(1e-5, mpq_class(1, 3)).pass);
    CHECK(verify_latsum_brute(1e-4).pass);
}
