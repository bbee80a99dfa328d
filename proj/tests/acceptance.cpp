// one line per acceptance criterion
#include <cstdio>
#include <string>
#include <vector>

#include "mmv/checks.hpp"

using namespace mmv;

int main() {
    struct Limit {
        int k;
        double per_check, total; // seconds, 0 = none
    };
    const Limit limits[] = {{1, 10, 0}, {2, 0, 1}, {3, 0, 0},  {4, 0, 5},  {5, 0, 60},  {6, 0, 0},
                            {7, 0, 0},  {8, 0, 0}, {9, 0, 0},  {10, 0, 0}, {11, 0, 0}, {12, 0, 0}};
    int failed = 0;
    for (auto [k, per, tot] : limits) {
        Stopwatch sw;
        auto rs = run_criterion(k);
        double total = sw.seconds();
        std::vector<std::string> why;
        double worst = 0;
        for (auto& r : rs) {
            if (!r.pass) why.push_back(r.id + " diff " + fmtg(r.diff, 3) + " tol " + fmtg(r.tol, 3));
            if (per > 0 && r.seconds > per) why.push_back(r.id + " took " + fmtg(r.seconds, 3) + "s");
            if (r.tol > 0) worst = std::max(worst, r.diff / r.tol);
        }
        if (tot > 0 && total > tot) why.push_back("total " + fmtg(total, 3) + "s over " + fmtg(tot, 3) + "s");
        if (rs.empty()) why.push_back("no checks registered");
        bool ok = why.empty();
        std::printf("criterion %2d: %s  (%zu checks, %.2fs, worst diff/tol %.2g)", k, ok ? "PASS" : "FAIL", rs.size(),
                    total, worst);
        for (auto& w : why) std::printf(" [%s]", w.c_str());
        std::printf("\n");
        if (!ok) ++failed;
    }
    std::printf("%d of 12 criteria pass\n", 12 - failed);
    return failed ? 1 : 0;
}
