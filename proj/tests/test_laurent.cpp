#include <doctest.h>

#include <set>

#include "mmv/laurent.hpp"

using namespace mmv;

TEST_CASE("P_{a,c} builder against the parser") {
    CHECK(build_Pac(Coef(1L), Coef(3L)) == parse_laurent("x + 1/x + y + 1/y + 3"));
    CHECK(build_Pac(Coef(2L), Coef(3L)) == parse_laurent("2x + 2/x + y + 1/y + 3"));
    auto p0 = build_Pac(Coef(1L), Coef(0L));
    CHECK(p0 == parse_laurent("x + x^-1 + y + y^-1"));
    CHECK(p0.size() == 4);
}

TEST_CASE("Q_k expansion: xy coefficient is 2 - k") {
    // (1+x)(1+y)(x+y) = x + y + x^2 + 2xy + y^2 + x^2 y + x y^2
    auto q0 = build_Qk(Coef(0L));
    CHECK(q0 == parse_laurent("x + y + x^2 + 2xy + y^2 + x^2*y + x*y^2"));
    CHECK(build_Qk(Coef(3L)).coeff(1, 1) == Coef(-1L));
    CHECK(build_Qk(Coef(24L)).coeff(1, 1) == Coef(-22L));
    CHECK(build_Qk(Coef(3L)) == parse_laurent("(1+x)(1+y)(x+y) - 3xy"));
}

TEST_CASE("S_r substitution") {
    // r = 2: y-coefficient (1/2)(x + 1/x - 3)^2 + 2 = x^2/2 - 3x + 15/2 - 3/x + x^-2/2
    auto s = build_Sr(Coef(2L));
    CHECK(s.coeff(2, 1) == Coef(Q(1, 2)));
    CHECK(s.coeff(1, 1) == Coef(-3L));
    CHECK(s.coeff(0, 1) == Coef(Q(15, 2)));
    CHECK(s.coeff(-1, 1) == Coef(-3L));
    CHECK(s.coeff(-2, 1) == Coef(Q(1, 2)));
    for (long r : {1L, 2L, 5L}) {
        auto t = build_Sr(Coef(r));
        CHECK(t.coeff(0, 0) == Coef(1L));
        CHECK(t.coeff(0, 2) == Coef(1L));
    }
    // r = 1: (x + 1/x - 2)^2 + 2 = x^2 - 4x + 8 - 4/x + x^-2
    auto one = build_Sr(Coef(1L));
    CHECK(one.coeff(0, 1) == Coef(8L));
    CHECK(one.coeff(1, 1) == Coef(-4L));
}

static std::set<Exp2> vertex_set(const NewtonPolygon& n) { return {n.vertices.begin(), n.vertices.end()}; }

TEST_CASE("Newton polygons") {
    auto sq = newton_polygon(build_Pac(Coef(2L), Coef(3L)));
    CHECK(sq.kind == NewtonPolygon::Polygon);
    CHECK(vertex_set(sq) == std::set<Exp2>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    CHECK(sq.edges.size() == 4);

    // support of (1+x)(1+y)(x+y): hull is the hexagon (1,0),(2,0),(2,1),(1,2),(0,2),(0,1)
    auto hex = newton_polygon(build_Qk(Coef(3L)));
    CHECK(vertex_set(hex) == std::set<Exp2>{{1, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}, {0, 1}});

    auto pt = newton_polygon(parse_laurent("x^2*y"));
    CHECK(pt.kind == NewtonPolygon::Point);
    CHECK(pt.vertices.size() == 1);
}

TEST_CASE("temperedness") {
    for (long k : {-4L, 0L, 1L, 3L, 7L}) CHECK(is_tempered(build_Pac(Coef(1L), Coef(k))).tempered);
    CHECK(is_tempered(build_Qk(Coef(3L))).tempered);

    auto t = is_tempered(build_Pac(Coef(2L), Coef(3L)));
    REQUIRE_FALSE(t.tempered);
    REQUIRE_FALSE(t.witnesses.empty());
    for (auto& w : t.witnesses) {
        double m = std::abs(w.root);
        CHECK((std::fabs(m - 2) < 1e-12 || std::fabs(m - 0.5) < 1e-12));
    }
}

TEST_CASE("surd coefficients stay exact") {
    auto p = parse_laurent("sqrt(-7)*x^-1 + y");
    CHECK(p.coeff(-1, 0).exact());
    CHECK(p.domain() == Domain::QuadraticSurd);
    Surd s = Surd::sqrt_of(-7);
    CHECK((s * s) == Surd(-7));
    CHECK(std::abs(s.value() - cplx(0, std::sqrt(7.0))) < 1e-15);
}

TEST_CASE("polynomial roots") {
    // (t - 1)(t - 2)(t + 3) = t^3 - 7t + 6
    auto r = poly_roots({cplx(6), cplx(-7), cplx(0), cplx(1)});
    REQUIRE(r.size() == 3);
    double prod = 1;
    for (auto z : r) prod *= std::abs(z);
    CHECK(prod == doctest::Approx(6).epsilon(1e-12));
}
