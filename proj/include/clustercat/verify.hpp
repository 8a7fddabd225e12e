#ifndef CLUSTERCAT_VERIFY_HPP
#define CLUSTERCAT_VERIFY_HPP

#include <string>
#include <vector>

#include "clustercat/dynkin.hpp"

namespace clustercat {

struct SuiteResult {
    std::string suite;
    bool pass = false;
    std::string detail; // failure reason or summary counts
};

// Named invariant suites: roots, ar, hom, mesh, compat, tilting,
// triangles, cluster; "all" runs every one of them. Expensive suites
// self-cap by rank (the cap is reported in the detail string).
std::vector<SuiteResult> run_verification(const Orientation& q, const std::string& suite);

std::vector<std::string> verification_suite_names();

} // namespace clustercat

#endif
