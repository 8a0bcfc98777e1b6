#pragma once

#include "pbwdeform/params.hpp"

#include <array>

namespace pbwdeform {

struct ConditionWitness {
    std::vector<int> tuple;                      // group elements then basis indices
    GroupAlgebraElem residual_ga;                // for kG-valued conditions
    std::vector<FieldScalar> residual_vec;       // for V-valued conditions
    std::string text;
};

struct ConditionStatus {
    bool pass = true;
    int failure_count = 0;
    std::optional<ConditionWitness> witness;     // first failure, fixed tuple order
};

/// Result of the five-condition check; overall verdict is the conjunction.
struct ConditionReport {
    std::array<ConditionStatus, 5> conditions;
    bool pass() const {
        for (const auto& c : conditions)
            if (!c.pass) return false;
        return true;
    }
    std::string render(bool structured = false) const;
};

/// The authoritative combinatorial checker: evaluates the five equivalent
/// conditions for H_{lambda,kappa} to be a PBW deformation, on all basis
/// tuples (sufficient by multilinearity).
ConditionReport check_pbw(const LambdaParam& lambda, const KappaParam& kappa,
                          const RepPtr& rep);

struct InstanceEnumSpec {
    RepPtr rep;
    bool exhaustive = true;
    std::uint64_t seed = 0;   // random mode
    int count = 0;            // random mode
};

/// Deterministic enumeration of (lambda, kappa) pairs.  Exhaustive mode runs
/// over every kG value in each free table slot (lambda(1,.) pinned to zero);
/// it errors over the rationals.  Random mode is a seeded stream.
std::vector<std::pair<LambdaParam, KappaParam>> enumerate_instances(const InstanceEnumSpec& spec);

}  // namespace pbwdeform
