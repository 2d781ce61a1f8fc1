#ifndef KMM_LA_AXIOMS_HPP
#define KMM_LA_AXIOMS_HPP

#include <string>
#include <vector>

#include "kmm/la/eval.hpp"

namespace kmm::la {

struct AxiomResult {
    std::string name;
    unsigned trials = 0;
    unsigned failures = 0;
    std::string first_failure;  // printed instance + environment
};

struct AxiomReport {
    unsigned trials_per_axiom = 0;
    unsigned long long seed = 0;
    std::vector<AxiomResult> results;

    bool all_ok() const {
        for (const auto& r : results)
            if (r.failures) return false;
        return true;
    }
};

/// Randomized validity suite: every axiom A1..A33 is instantiated
/// `trials` times with random well-sorted substitution instances and
/// random environments, and evaluated; the two rules (matrix equality
/// and Sigma-0-B induction) are checked semantically on sampled
/// premise-satisfying instances. Any falsified instance is a defect of
/// the evaluator, not of the axioms.
AxiomReport check_axioms(unsigned trials, unsigned long long seed, const EvalBudget& budget = {});

} // namespace kmm::la

#endif
