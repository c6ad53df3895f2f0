// Acceptance runner: one pass/fail line per numbered criterion.
#include "qtb/selftest.hpp"

#include <cstdio>
#include <cstring>

int main(int argc, char** argv) {
    qtb::TestLevel level = qtb::TestLevel::Full;
    for (int a = 1; a < argc; ++a)
        if (std::strcmp(argv[a], "--fast") == 0) level = qtb::TestLevel::Fast;
    bool all_ok = true;
    for (int k = 1; k <= qtb::criterion_count(); ++k) {
        const auto r = qtb::run_criterion(k, level);
        std::printf("criterion %2d [%s] %s (%.2fs)%s%s\n", r.number,
                    r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                    r.message.empty() ? "" : ": ", r.message.c_str());
        std::fflush(stdout);
        all_ok = all_ok && r.passed;
    }
    return all_ok ? 0 : 1;
}
