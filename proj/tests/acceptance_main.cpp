// Acceptance runner: one pass/fail line per criterion, nonzero exit on any
// failure. --level {quick|full} selects the range sizes (default full),
// --seed N drives the randomized consistency items.
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <string>

#include "torilab/verify.hpp"

int main(int argc, char** argv) {
    torilab::VerifyLevel level = torilab::VerifyLevel::Full;
    uint64_t seed = 12345;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--level") == 0 && i + 1 < argc) {
            std::string v = argv[++i];
            if (v == "quick") {
                level = torilab::VerifyLevel::Quick;
            } else if (v == "full") {
                level = torilab::VerifyLevel::Full;
            } else {
                std::fprintf(stderr, "unknown level '%s' (expected quick or full)\n", v.c_str());
                return 1;
            }
        } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            seed = std::strtoull(argv[++i], nullptr, 10);
        } else {
            std::fprintf(stderr, "usage: %s [--level quick|full] [--seed N]\n", argv[0]);
            return 1;
        }
    }

    auto results = torilab::run_verification(level, seed);
    int failures = 0;
    for (const auto& r : results) {
        std::printf("[%s] %2d. %s (%.2fs): %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
        if (!r.pass) ++failures;
    }
    std::printf("%zu criteria, %d failed\n", results.size(), failures);
    return failures == 0 ? 0 : 2;
}
