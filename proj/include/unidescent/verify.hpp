#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "unidescent/symchar.hpp"

namespace unidescent {

/*
 * Acceptance suites. Each suite sweeps one exact identity of the engine up
 * to its default desk-scale bound, prints a single PASS/FAIL line, and on
 * failure reports the first counterexample. max_n = 0 keeps the default
 * bound; a positive max_n lowers it (never raises it).
 */
struct VerifyOptions {
    int max_n = 0;
    std::vector<std::string> suites;  // empty = all, in criterion order
};

std::vector<std::string> verification_suite_names();

// Runs the selected suites; returns the number of failures.
int run_verification(TableStore& store, const VerifyOptions& options, std::ostream& out);

}  // namespace unidescent
