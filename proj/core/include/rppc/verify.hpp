#ifndef RPPC_VERIFY_HPP
#define RPPC_VERIFY_HPP

#include <string>
#include <vector>

namespace rppc {

/* Corpus bounds for the property suites: every skew shape whose outer
 * partition has at most max_cells cells, every contained inner partition,
 * every entry bound up to max_entry. The seed feeds the randomized
 * resolution orders of the confluence suite.
 */
struct VerifyOptions {
    int max_cells = 6;
    int max_entry = 3;
    unsigned seed = 7;
    int random_orders = 10;
};

struct VerifyReport {
    std::string suite;
    long long cases = 0;
    bool passed = true;
    std::string witness; // first counterexample; empty when passed
};

/* Suites:
 *   intertwine  - word operators commute with the reading word
 *   identity    - basis expansion of the weight polynomial matches the
 *                 lattice-filling counts
 *   confluence  - resolution result is independent of the descent order
 *   elegant     - straight-shape counts match the capped-entry fillings
 *   symmetry    - weight polynomial is symmetric in adjacent variables
 *   reconstruct - word plus heights determine the filling
 *   components  - each component has one highest vertex carrying a Schur
 *                 weight polynomial, and their weights match the counts
 */
std::vector<std::string> verify_suite_names();

// Throws ValidationError for an unknown suite name.
VerifyReport run_verify_suite(const std::string& suite, const VerifyOptions& opts);

} // namespace rppc

#endif
