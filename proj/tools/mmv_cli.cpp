// mmv: command-line front end for the verification library
#include <cmath>
#include <cstdio>
#include <iostream>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mmv/bmz.hpp"
#include "mmv/checks.hpp"
#include "mmv/ecurve.hpp"
#include "mmv/elliptic.hpp"
#include "mmv/laurent.hpp"
#include "mmv/latsum.hpp"
#include "mmv/lfunc.hpp"
#include "mmv/mahler.hpp"
#include "mmv/qseries.hpp"
#include "mmv/regulator.hpp"

using namespace mmv;

namespace {

std::string format = "text";

int emit(const std::vector<Report>& rs) {
    bool ok = true;
    if (format == "json") {
        auto arr = nlohmann::json::array();
        for (auto& r : rs) arr.push_back(to_json(r));
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << csv_header() << "\n";
        for (auto& r : rs) std::cout << to_csv(r) << "\n";
    } else {
        for (auto& r : rs) {
            std::printf("%s  %-36s lhs=%.15g rhs=%.15g |diff|=%.3g tol=%.3g  %.3fs\n", r.pass ? "PASS" : "FAIL",
                        r.id.c_str(), r.lhs, r.rhs, r.diff, r.tol, r.seconds);
            std::printf("      %s\n", r.anchor.c_str());
            if (!r.notes.empty()) std::printf("      %s\n", r.notes.c_str());
        }
    }
    for (auto& r : rs) ok = ok && r.pass;
    return ok ? 0 : 1;
}

Q parse_rational(const std::string& s) {
    Q q;
    if (q.set_str(s, 10) != 0) {
        // decimals such as 2.5
        static const std::regex dec(R"(^([+-]?)(\d*)\.(\d+)$)");
        std::smatch m;
        if (!std::regex_match(s, m, dec)) throw std::invalid_argument("not a rational number: " + s);
        std::string digits = m[2].str() + m[3].str();
        mpz_class num(digits), den = 1;
        for (long i = 0; i < (long)m[3].length(); ++i) den *= 10;
        q = Q(num, den);
        if (m[1] == "-") q = -q;
    }
    q.canonicalize();
    return q;
}

// "2", "1.5", "sqrt(-3)", "i*sqrt(3)"
Report main_identity(const std::string& a, double tol) {
    static const std::regex imag(R"(^\s*sqrt\(\s*-\s*([0-9.eE+-]+)\s*\)\s*$)");
    std::smatch m;
    if (std::regex_match(a, m, imag)) return verify_main_identity_imag(std::stod(m[1]), tol);
    double v = std::stod(a);
    if (v < 0) v = -v; // m is even in a
    return verify_main_identity(v, tol);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mahler measure and L-value identity checker"};
    app.require_subcommand(1);
    app.add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

    std::vector<Report> out;
    int status = -1; // -1: reports in out decide

    // tempered
    std::string poly;
    auto* temp = app.add_subcommand("tempered", "temperedness of a Laurent polynomial in x, y");
    temp->add_option("poly", poly, "e.g. \"2x + 2/x + y + 1/y + 3\"")->required();
    temp->callback([&] {
        auto p = parse_laurent(poly);
        auto t = is_tempered(p);
        auto np = newton_polygon(p);
        std::cout << (t.tempered ? "tempered" : "non-tempered") << "\n";
        for (auto& w : t.witnesses) {
            auto& e = np.edges.at(w.edge);
            std::printf("witness: edge %zu (%d,%d)-(%d,%d), edge polynomial [", w.edge, e.from.first, e.from.second,
                        e.to.first, e.to.second);
            for (size_t i = 0; i < w.edge_poly.size(); ++i)
                std::printf("%s%s", i ? ", " : "", to_string(w.edge_poly[i]).c_str());
            std::printf("], root %.12g%+.12gi, |root| = %.12g\n", w.root.real(), w.root.imag(), std::abs(w.root));
        }
        if (t.numeric_fallback) std::cout << "note: some edge roots were found numerically\n";
        status = 0;
    });

    // mahler
    std::string method = "auto";
    double mtol = 1e-10;
    auto* mah = app.add_subcommand("mahler", "Mahler measure of a Laurent polynomial");
    mah->add_option("poly", poly)->required();
    mah->add_option("--method", method, "jensen, torus or auto")->check(CLI::IsMember({"jensen", "torus", "auto"}));
    mah->add_option("--tol", mtol, "target error");
    mah->callback([&] {
        auto p = parse_laurent(poly);
        MahlerResult r = method == "jensen" ? mahler_y_quadratic(p, mtol)
                         : method == "torus" ? mahler_torus2d(p, mtol)
                                             : mahler(p, mtol);
        std::printf("m(%s) = %.15g\n", to_string(p).c_str(), r.value);
        std::printf("method %s, error estimate %.3g, nodes %ld%s\n", method_name(r.method), r.error, r.nodes,
                    r.budget_exceeded ? ", node budget exceeded before reaching the target" : "");
        status = r.budget_exceeded ? 1 : 0;
    });

    // verify
    auto* ver = app.add_subcommand("verify", "check one identity family");
    ver->require_subcommand(1);
    double tol = NAN;
    auto T = [&](double dflt) { return std::isnan(tol) ? dflt : tol; };
    auto with_tol = [&](CLI::App* s) { s->add_option("--tol", tol, "tolerance"); };

    std::string a_text = "2";
    auto* mi = ver->add_subcommand("main-identity", "(3/2) m(P_{a,a^2-1}) = m(Q_{a^2-1}) + log|a|");
    mi->add_option("--a", a_text, "real a >= 1, or sqrt(-r)")->required();
    with_tol(mi);
    mi->callback([&] { out.push_back(main_identity(a_text, T(1e-6))); });

    double a = 2, p = 0.5;
    auto* kp = ver->add_subcommand("kp", "elliptic-integral identity in a");
    kp->add_option("--a", a)->required();
    with_tol(kp);
    kp->callback([&] { out.push_back(verify_KP(a, T(1e-12))); });

    auto* com3 = ver->add_subcommand("com3", "elliptic-integral identity in p");
    com3->add_option("--p", p)->required();
    with_tol(com3);
    com3->callback([&] { out.push_back(verify_com3(p, T(1e-12))); });

    int order = 12;
    auto* me = ver->add_subcommand("modular-equation", "relation between the modular units, exact");
    me->add_option("--order", order, "q-adic precision")->check(CLI::Range(1, 200));
    me->callback([&] { out.push_back(verify_modular_equation(order)); });

    auto* bf = ver->add_subcommand("bmz-f", "assembled weight-2 form, exact");
    bf->add_option("--order", order)->check(CLI::Range(12, 100));
    bf->callback([&] { out.push_back(verify_bmz_f(order)); });

    auto* fd = ver->add_subcommand("f-decomposition", "newform plus Eisenstein decomposition, exact");
    fd->add_option("--order", order)->check(CLI::Range(12, 100));
    fd->callback([&] { out.push_back(verify_f_decomposition(order)); });

    int line = 0;
    auto* c13 = ver->add_subcommand("corollary13", "seven Mahler measure evaluations");
    c13->add_option("--line", line, "1..7, all when omitted")->check(CLI::Range(1, 7));
    with_tol(c13);
    c13->callback([&] {
        for (int k = 1; k <= 7; ++k)
            if (!line || line == k) out.push_back(verify_corollary13_line(k, T(1e-6)));
    });

    auto* b30 = ver->add_subcommand("boyd30", "conductor-30 evaluations and m(P_{2,3})");
    with_tol(b30);
    b30->callback([&] {
        for (int k : {3, 9, 24}) out.push_back(verify_boyd30_line(k, T(1e-6)));
        out.push_back(verify_theorem14(T(1e-6)));
    });

    auto* lal = ver->add_subcommand("lalin", "functional identity for g");
    lal->add_option("--p", p)->required();
    with_tol(lal);
    lal->callback([&] { out.push_back(verify_lalin_identity(p, T(1e-6))); });

    auto* t41 = ver->add_subcommand("theorem41", "divisor ledger (exact) and g(-8/3) - g(-1/3) = (2/3) g(9)");
    with_tol(t41);
    t41->callback([&] {
        out.push_back(verify_theorem41_ledger());
        out.push_back(verify_theorem41_quadrature(T(1e-6)));
    });

    std::string alpha = "3";
    long M = 2000;
    auto* mel = ver->add_subcommand("mellit", "g(alpha) against the Bloch regulator");
    mel->add_option("--alpha", alpha, "rational, e.g. 9 or -8/3")->required();
    mel->add_option("--truncation", M, "lattice shell radius")->check(CLI::Range(2L, 20000L));
    with_tol(mel);
    mel->callback([&] { out.push_back(verify_mellit(parse_rational(alpha), T(1e-3), M)); });

    auto* ry = ver->add_subcommand("rogers-yuttanan", "m(Q_3) through the lattice sums F(b,c)");
    with_tol(ry);
    ry->callback([&] {
        out.push_back(verify_rogers_yuttanan(T(1e-5)));
        out.push_back(verify_latsum_brute(1e-4));
    });

    // report
    bool all = false;
    auto* rep = app.add_subcommand("report", "run the full suite");
    rep->add_flag("--all", all, "every registered check")->required();
    rep->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    rep->callback([&] { out = run_all(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    if (status >= 0) return status;
    return emit(out);
}
