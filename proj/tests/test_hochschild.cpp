#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pbwdeform/hochschild.hpp"
#include "pbwdeform/instance.hpp"
#include "pbwdeform/pbw_check.hpp"

#include <random>

using namespace pbwdeform;

namespace {

// Apply the differential to a whole chain by running it through each middle
// factor and multiplying the outer monomials back in.
XChain chain_differential(const XChain& chain) {
    const RepPtr& rep = chain.rep();
    const FieldScalar one = FieldScalar::one(rep->field());
    XChain out(rep);
    for (const auto& [key, c] : chain.terms()) {
        const XChain mid = differential(key.mid, rep);
        for (const auto& [k2, c2] : mid.terms()) {
            SkewElem l1(rep), r1(rep), l2(rep), r2(rep);
            l1.add_term(key.left, one);
            r1.add_term(key.right, one);
            l2.add_term(k2.left, one);
            r2.add_term(k2.right, one);
            out.add_product(skew_multiply(l1, l2), k2.mid.groups, k2.mid.wedge,
                            skew_multiply(r2, r1), c * c2);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("middle basis sizes") {
    auto rep = corpus_get("cyclic-p3").rep;  // |G| = 3, dim V = 2
    CHECK(middle_basis(rep, 1).size() == 3 + 2);
    CHECK(middle_basis(rep, 2).size() == 9 + 3 * 2 + 1);
    CHECK(middle_basis(rep, 3).size() == 27 + 9 * 2 + 3 * 1);
}

TEST_CASE("the differential squares to zero") {
    for (const char* name : {"cyclic-p2", "s3-coxeter-q"}) {
        auto rep = corpus_get(name).rep;
        for (int deg : {2, 3})
            for (const XBasisElem& x : middle_basis(rep, deg)) {
                INFO(name << " " << x.str());
                CHECK(chain_differential(differential(x, rep)).is_zero());
            }
    }
}

TEST_CASE("differential of a lone vector") {
    auto rep = corpus_get("cyclic-p2").rep;
    XChain d = differential(XBasisElem{{}, {0}}, rep);
    XChain expected(rep);
    expected.add_product(SkewElem::basis_vector(rep, 0), {}, {}, SkewElem::one(rep),
                         FieldScalar::one(rep->field()));
    expected.add_product(SkewElem::one(rep), {}, {}, SkewElem::basis_vector(rep, 0),
                         -FieldScalar::one(rep->field()));
    CHECK((d - expected).is_zero());
}

TEST_CASE("cochain extension places parameters in the right spots") {
    Instance inst = corpus_get("cyclic-p3");
    Cochain2 L = extend_cochain(inst.lambda);
    Cochain2 K = extend_cochain(inst.kappa);
    CHECK(L.graded_degree() == -1);
    CHECK(K.graded_degree() == -2);
    CHECK(L.value(XBasisElem{{1}, {1}}) ==
          SkewElem::from_group_algebra(inst.rep, inst.lambda.value(1, 1)));
    CHECK(L.value(XBasisElem{{1}, {0}}).is_zero());
    CHECK(L.value(XBasisElem{{1, 1}, {}}).is_zero());  // lambda lives on X_{1,1} only
    CHECK(K.value(XBasisElem{{}, {0, 1}}) ==
          SkewElem::from_group_algebra(inst.rep, inst.kappa.value(0, 1)));
    CHECK(K.value(XBasisElem{{1}, {1}}).is_zero());
}

TEST_CASE("psi2 is a section of phi2 on the middle basis") {
    auto rep = corpus_get("cyclic-p5").rep;
    for (const XBasisElem& x : middle_basis(rep, 2)) {
        XChain expected(rep);
        expected.add_product(SkewElem::one(rep), x.groups, x.wedge, SkewElem::one(rep),
                             FieldScalar::one(rep->field()));
        CHECK((psi2(phi2(x, rep), rep) - expected).is_zero());
    }
}

TEST_CASE("phi3 is a chain map into the bar slice") {
    auto rep = corpus_get("cyclic-p3").rep;
    for (const XBasisElem& x : middle_basis(rep, 3))
        CHECK(bar_delta3(phi3(x, rep), rep) == phi2_of_chain(differential(x, rep)));
}

TEST_CASE("slice cochains reject inputs outside the generator slice") {
    Instance inst = corpus_get("cyclic-p3");
    BarSliceCochain mu = pullback_psi2(extend_cochain(inst.lambda));
    SkewElem quadratic = skew_multiply(SkewElem::basis_vector(inst.rep, 0),
                                       SkewElem::basis_vector(inst.rep, 1));
    CHECK_THROWS_AS(mu.eval(quadratic, SkewElem::one(inst.rep)), SliceViolation);
    // Degree-1 slice inputs with mixed group parts are also outside.
    SkewElem twisted = SkewElem::basis_vector(inst.rep, 0);
    twisted.add_term({{1, 0}, 1, 0}, FieldScalar::one(inst.rep->field()));
    CHECK_THROWS_AS(mu.eval(twisted, SkewElem::one(inst.rep)), SliceViolation);
}

TEST_CASE("brackets with matching arguments behave as expected") {
    Instance inst = corpus_get("cyclic-p3");
    Cochain2 K = extend_cochain(inst.kappa);
    // [kappa, kappa] vanishes identically: kappa has no group-degree part.
    CHECK(gerstenhaber_bracket(K, K).is_zero());
}

TEST_CASE("homological verdicts agree with the combinatorial checker") {
    for (const char* name : {"cyclic-p2", "cyclic-p3", "modular-counterexample"}) {
        Instance inst = corpus_get(name);
        INFO(name);
        CHECK(check_homological(inst.lambda, inst.kappa).pass() ==
              check_pbw(inst.lambda, inst.kappa, inst.rep).pass());
    }
    // A failing pair produces a witness naming the violated identity.
    Instance inst = corpus_get("cyclic-p2");
    LambdaParam bad = LambdaParam::zero(inst.rep);
    bad.set(1, 0, GroupAlgebraElem::basis(inst.rep->field(), 2, 0));
    if (!check_pbw(bad, inst.kappa, inst.rep).pass()) {
        HomologicalReport report = check_homological(bad, inst.kappa);
        CHECK_FALSE(report.pass());
        bool witnessed = false;
        for (const auto& s : report.identities)
            if (!s.pass && s.witness.has_value()) witnessed = true;
        CHECK(witnessed);
    }
}

TEST_CASE("random parameter pairs keep the two checkers in sync") {
    auto rep = corpus_get("cyclic-p3").rep;
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 12; ++trial) {
        LambdaParam lambda = random_lambda(rep, rng);
        KappaParam kappa = random_kappa(rep, rng);
        CHECK(check_homological(lambda, kappa).pass() == check_pbw(lambda, kappa, rep).pass());
    }
}

TEST_CASE("deformation lifts") {
    Instance inst = corpus_get("cyclic-p3");
    {
        DeformationHandle h = lift_to_deformation(inst.lambda, inst.kappa, LiftMode::graded);
        CHECK(h.system.t_lambda() == 1);
        CHECK(h.system.t_kappa() == 2);
        // mu1 restricted to V (x) V vanishes; mu2 on (w, v) returns kappa.
        CHECK(h.mu1.value(0, 1).is_zero());
        CHECK(h.mu2.value(1, 0) == inst.kappa.value(1, 0));
        CHECK(h.mu1.value(2 + 1, 1) == inst.lambda.value(1, 1));
    }
    {
        // Collapsed mode needs lambda = 0.
        CHECK_THROWS(lift_to_deformation(inst.lambda, inst.kappa, LiftMode::collapsed));
        DeformationHandle h =
            lift_to_deformation(LambdaParam::zero(inst.rep), inst.kappa, LiftMode::collapsed);
        CHECK(h.system.t_kappa() == 1);
        CHECK(h.mu1.value(1, 0) == inst.kappa.value(1, 0));
    }
    {
        // Non-PBW parameters are rejected.
        LambdaParam bad = LambdaParam::zero(inst.rep);
        bad.set(0, 0, GroupAlgebraElem::basis(inst.rep->field(), 3, 0));
        CHECK_THROWS(lift_to_deformation(bad, KappaParam::zero(inst.rep), LiftMode::graded));
    }
}
