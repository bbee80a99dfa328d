#pragma once

#include <array>

#include "mmv/cyclo30.hpp"
#include "mmv/qseries.hpp"
#include "mmv/report.hpp"

namespace mmv {

using QSeriesC = QSeries<Cyclotomic30>;

// e_{a,b} at level 30; a, b not divisible by 30
QSeriesC e_ab(int a, int b, int order);
// e_{a,bc} e_{b,-ac} - e_{a,-bc} e_{b,ac}
QSeriesC f_abc(int a, int b, int c, int order);

struct BilinearUnitPair {
    std::array<int, 16> left{};  // exponent of g_a in the first unit, index 1..15
    std::array<int, 16> right{}; // same for the second
    int cusp = 9;
};
// x0 and ytilde (the -1 is irrelevant for the regulator)
BilinearUnitPair x0_ytilde_pair();

// weight-2 form attached to the pair: (1/4) sum left_a right_b f_{a,b;c}, constant term dropped.
// Throws if a coefficient is not rational.
QSeriesQ assemble_f(const BilinearUnitPair& pr, int order);
QSeriesQ assemble_f(int order);
// same sum through the complex embedding of zeta_30, for cross-checking
std::vector<std::complex<double>> assemble_f_float(const BilinearUnitPair& pr, int order);

// -10 f30 + (5/24)(E2 - 4E2(2) - 3E2(3) + 12E2(6)) + (175/24)(E2(5) - ...) - 45
QSeriesQ f_decomposition_rhs(int order);

Report verify_bmz_f(int order);
Report verify_f_decomposition(int order);

} // namespace mmv
