#ifndef BIALG_ACCEPTANCE_HPP
#define BIALG_ACCEPTANCE_HPP

#include <functional>
#include <string>
#include <vector>

namespace bialg {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // worst metric observed vs. its bound
};

// Runs the full acceptance suite (the `demo` subcommand and the acceptance
// test binary share it).  The optional callback observes each result as it
// completes.
std::vector<CriterionResult> run_acceptance(
    const std::function<void(const CriterionResult&)>& on_result = nullptr);

} // namespace bialg

#endif
