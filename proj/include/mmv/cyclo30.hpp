#pragma once

#include <array>
#include <complex>
#include <ostream>

#include <gmpxx.h>

namespace mmv {

// Q(zeta_30) in the power basis 1, z, ..., z^7 modulo Phi_30 = x^8 + x^7 - x^5 - x^4 - x^3 + x + 1
class Cyclotomic30 {
public:
    std::array<mpq_class, 8> v{};

    Cyclotomic30() = default;
    Cyclotomic30(int r) { v[0] = r; }
    Cyclotomic30(const mpq_class& r) { v[0] = r; }

    static Cyclotomic30 zeta_pow(long k); // zeta^k, any integer k

    bool is_rational() const;
    mpq_class rational_part() const { return v[0]; }
    std::complex<double> embed() const; // zeta -> e^{2 pi i/30}

    Cyclotomic30 inverse() const;

    friend Cyclotomic30 operator+(const Cyclotomic30& a, const Cyclotomic30& b);
    friend Cyclotomic30 operator-(const Cyclotomic30& a, const Cyclotomic30& b);
    friend Cyclotomic30 operator-(const Cyclotomic30& a);
    friend Cyclotomic30 operator*(const Cyclotomic30& a, const Cyclotomic30& b);
    friend Cyclotomic30 operator/(const Cyclotomic30& a, const Cyclotomic30& b) { return a * b.inverse(); }
    friend bool operator==(const Cyclotomic30& a, const Cyclotomic30& b) { return a.v == b.v; }
    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic30& a);
};

} // namespace mmv
