#pragma once

#include "pbwdeform/rewrite.hpp"

namespace pbwdeform {

/// The averaging map gamma: V -> kG used to untwist lambda when the group
/// order is invertible in the field.
struct GammaMap {
    RepPtr rep;
    std::vector<GroupAlgebraElem> values;  // values[i] = gamma(v_i)

    GroupAlgebraElem value(int i) const { return values[i]; }
    GroupAlgebraElem value_vec(const std::vector<FieldScalar>& u) const;
    FieldScalar component(int a, int i) const { return values[i].coeff(a); }
};

struct ModularObstruction : std::runtime_error {
    explicit ModularObstruction(std::uint32_t p, int order)
        : std::runtime_error("group order " + std::to_string(order) +
                             " is not invertible in characteristic " + std::to_string(p)) {}
};

/// gamma(v) = (1/|G|) sum_{a,b} lambda_{ab}(b, ^{b^-1} v) a.
GammaMap gamma(const LambdaParam& lambda);

/// kappa(u,v) = gamma(u)gamma(v) - gamma(v)gamma(u)
///            + lambda(gamma(u), v) - lambda(gamma(v), u).
KappaParam kappa_from_gamma(const LambdaParam& lambda, const GammaMap& g);

struct ConversionIso {
    GammaMap gammamap;
    KappaParam kappa;                  // derived kappa of the source H_{0,kappa}
    GeneratorImages forward;           // f: H_{0,kappa} -> H_{lambda,0}, v -> v + gamma(v)
    GeneratorImages backward;          // f^-1, v -> v - gamma(v)
};

/// Constructs and fully verifies the isomorphism H_{0,kappa} = H_{lambda,0}:
/// both directions are homomorphisms and both composites fix the generators.
/// Throws when H_{lambda,0} is not PBW or the characteristic obstructs.
ConversionIso build_conversion_iso(const LambdaParam& lambda);

}  // namespace pbwdeform
