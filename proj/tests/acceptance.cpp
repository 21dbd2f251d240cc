#include <cstdio>

#include "l21/selftest.hpp"

int main() {
    bool all = true;
    for (const auto& c : l21::run_acceptance(false)) {
        all = all && c.pass;
        std::printf("%s %s (%.2fs)%s%s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.seconds,
                    c.details.empty() ? "" : " ", c.details.c_str());
        std::fflush(stdout);
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES");
    return all ? 0 : 1;
}
