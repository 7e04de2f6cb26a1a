#ifndef MUINV_SUITES_HPP
#define MUINV_SUITES_HPP

#include <string>
#include <vector>

namespace muinv {
namespace suites {

// Named invariant sweeps: each suite re-derives a family of facts with an
// independent method (brute-force filters, recursion-only tables, randomized
// round-trips with fixed seeds) and compares against the main code paths.
struct SuiteResult {
    std::string name;
    bool passed = false;
    std::vector<std::string> notes;
    double seconds = 0.0;
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name);
std::vector<SuiteResult> run_all();

}  // namespace suites
}  // namespace muinv

#endif
