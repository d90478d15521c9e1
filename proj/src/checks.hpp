#ifndef HALFLAP_CHECKS_HPP
#define HALFLAP_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace halflap {

// Self-verification suites: each pits an implementation path against an
// independent oracle and reports the worst observed error against a pinned
// tolerance.  Deterministic for a fixed seed.
struct CheckResult {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    double elapsed_ms = 0.0;
    bool passed = false;
};

std::int64_t check_count();

// level: 0 = fast (seconds), 1 = full (includes the n_max = 10^6 series
// oracle at its 1e-9 tolerance).
CheckResult run_single_check(std::int64_t index, int level, std::uint64_t seed);
std::vector<CheckResult> run_checks(int level, std::uint64_t seed);

} // namespace halflap

#endif
