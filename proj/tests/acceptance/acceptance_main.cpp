#include <cstdio>
#include <string>

#include "pf/verify.hpp"

int main() {
    const auto results = pf::verify::run_verification();
    int failed = 0;
    for (const auto& c : results) {
        const bool ok = c.pass();
        failed += ok ? 0 : 1;
        std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str());
        if (!c.error.empty()) std::printf("    error: %s\n", c.error.c_str());
        for (const auto& r : c.reports) {
            std::printf("    [%s] %-52s computed=%.10g reference=%.10g abs=%.3g rel=%.3g tol=%.3g\n",
                        r.pass ? "ok" : "x", r.label.c_str(), r.series_value, r.oracle_value,
                        r.abs_dev, r.rel_dev, r.tolerance);
        }
    }
    std::printf("%zu criteria, %d failed\n", results.size(), failed);
    return failed == 0 ? 0 : 1;
}
