#include <iostream>

#include "unidescent/verify.hpp"

// Runs every acceptance suite at its full desk-scale bound and exits
// nonzero if any identity fails.
int main() {
    unidescent::TableStore store;
    unidescent::VerifyOptions options;  // default bounds, all suites
    int failures = unidescent::run_verification(store, options, std::cout);
    return failures == 0 ? 0 : 1;
}
