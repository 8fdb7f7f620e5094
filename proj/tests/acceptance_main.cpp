// Acceptance suite: one exact check per criterion, one PASS/FAIL line each.
#include <iostream>

#include "qaffine/selftest.hpp"

int main() {
    auto results = qaffine::run_acceptance(&std::cout);
    int failures = 0;
    for (const auto& r : results) failures += !r.pass;
    std::cout << (failures ? "RESULT: FAIL (" : "RESULT: PASS (")
              << results.size() - failures << "/" << results.size() << " criteria)"
              << std::endl;
    return failures ? 1 : 0;
}
