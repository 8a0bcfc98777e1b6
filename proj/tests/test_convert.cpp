#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pbwdeform/convert.hpp"
#include "pbwdeform/instance.hpp"
#include "pbwdeform/pbw_check.hpp"

using namespace pbwdeform;

namespace {

// Literal double-sum oracle for the averaging map, written independently of
// the library implementation.
GroupAlgebraElem gamma_oracle(const LambdaParam& lambda, int i) {
    const RepPtr& rep = lambda.rep();
    const auto& G = rep->group();
    const Field f = rep->field();
    const int n = G.order();
    GroupAlgebraElem out = GroupAlgebraElem::zero(f, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            // the ab-coefficient of lambda(b, ^{b^-1} v_i) contributes at a
            FieldScalar c = lambda.value_vec(b, rep->act_on_basis(G.inv(b), i)).coeff(G.mul(a, b));
            out.add(a, c);
        }
    return FieldScalar::from_int(n, f).inverse() * out;
}

}  // namespace

TEST_CASE("gamma vanishes on the zero parameter") {
    auto rep = corpus_get("s3-coxeter-q").rep;
    GammaMap g = gamma(LambdaParam::zero(rep));
    for (int i = 0; i < rep->dim(); ++i) CHECK(g.value(i).is_zero());
}

TEST_CASE("modular group order obstructs the averaging map") {
    Instance inst = corpus_get("cyclic-p2");
    CHECK_THROWS_AS(gamma(inst.lambda), ModularObstruction);
    CHECK_THROWS_AS(gamma(LambdaParam::zero(corpus_get("cyclic-p5").rep)), ModularObstruction);
}

TEST_CASE("gamma agrees with the literal double sum on S3") {
    Instance inst = corpus_get("s3-coxeter-q");
    GammaMap g = gamma(inst.lambda);
    for (int i = 0; i < 2; ++i) CHECK(g.value(i) == gamma_oracle(inst.lambda, i));
}

TEST_CASE("gamma is linear") {
    Instance inst = corpus_get("s3-coxeter-q");
    const Field q = inst.rep->field();
    GammaMap g = gamma(inst.lambda);
    std::vector<FieldScalar> u = {FieldScalar::from_int(3, q), FieldScalar::from_int(-2, q)};
    CHECK(g.value_vec(u) ==
          FieldScalar::from_int(3, q) * g.value(0) - FieldScalar::from_int(2, q) * g.value(1));
}

TEST_CASE("component identity of the averaging map") {
    // For each a: 0 = gamma_a(v)(u - ^a u) - gamma_a(u)(v - ^a v) as vectors,
    // which is what makes the conversion kappa alternating and well placed.
    Instance inst = corpus_get("s3-coxeter-q");
    const RepPtr& rep = inst.rep;
    const Field q = rep->field();
    GammaMap g = gamma(inst.lambda);
    for (int a = 0; a < 6; ++a)
        for (int u = 0; u < 2; ++u)
            for (int v = 0; v < 2; ++v) {
                auto au = rep->act_on_basis(a, u);
                auto av = rep->act_on_basis(a, v);
                for (int k = 0; k < 2; ++k) {
                    FieldScalar du = (k == u ? FieldScalar::one(q) : FieldScalar::zero(q)) - au[k];
                    FieldScalar dv = (k == v ? FieldScalar::one(q) : FieldScalar::zero(q)) - av[k];
                    CHECK(g.component(a, v) * du == g.component(a, u) * dv);
                }
            }
}

TEST_CASE("derived kappa is alternating and gives a PBW deformation") {
    Instance inst = corpus_get("s3-coxeter-q");
    GammaMap g = gamma(inst.lambda);
    KappaParam kappa = kappa_from_gamma(inst.lambda, g);
    CHECK(kappa.value(0, 1) == -kappa.value(1, 0));
    CHECK(check_pbw(LambdaParam::zero(inst.rep), kappa, inst.rep).pass());
    // The documented values for this example.
    const Field q = inst.rep->field();
    GroupAlgebraElem k01 = kappa.value(0, 1);
    FieldScalar sum = FieldScalar::zero(q);
    for (const auto& [gg, c] : k01.coeffs()) {
        CHECK(classify_element(*inst.rep, gg) == ElementClass::Codim2);
        sum += c;
    }
    CHECK(sum == FieldScalar::zero(q));  // supported on the two rotations with opposite weights
}

TEST_CASE("full conversion isomorphism verifies both ways") {
    Instance inst = corpus_get("s3-coxeter-q");
    ConversionIso iso = build_conversion_iso(inst.lambda);

    ReductionSystem target(inst.rep, inst.lambda, KappaParam::zero(inst.rep));
    ReductionSystem source(inst.rep, LambdaParam::zero(inst.rep), iso.kappa);
    CHECK(verify_homomorphism(iso.forward, source.relations(), target).ok);
    CHECK(verify_homomorphism(iso.backward, target.relations(), source).ok);

    // forward(v_i) = v_i + gamma(v_i) in the target.
    for (int i = 0; i < 2; ++i) {
        SkewElem expect = SkewElem::basis_vector(inst.rep, i) +
                          SkewElem::from_group_algebra(inst.rep, iso.gammamap.value(i));
        CHECK(normal_form(iso.forward.v_images[i], target) == expect);
    }
}

TEST_CASE("conversion also works for a reflection on a line and for D4") {
    const Field q{0};
    {
        // Z/2 acting by the swap on k^2.
        Matrix swap(2, 2, q);
        swap.at(0, 1) = swap.at(1, 0) = FieldScalar::one(q);
        auto [group, rep] = close_generators({swap});
        REQUIRE(group->order() == 2);
        int s = 1 - group->identity();
        LambdaParam lambda = build_lambda_coxeter(
            rep, {s}, {{FieldScalar::one(q), FieldScalar::from_int(-1, q)}},
            {FieldScalar::one(q)});
        REQUIRE(check_pbw(lambda, KappaParam::zero(rep), rep).pass());
        ConversionIso iso = build_conversion_iso(lambda);
        CHECK(check_pbw(LambdaParam::zero(rep), iso.kappa, rep).pass());
        // Abelian group and a single reflection: the commutator part dies, and
        // kappa comes only from the lambda terms.
        CHECK(iso.kappa.value(0, 1) ==
              lambda.value_linear(iso.gammamap.value(0), 1) -
                  lambda.value_linear(iso.gammamap.value(1), 0));
    }
    {
        // D4 generated by the swap and a sign flip.
        Matrix swap(2, 2, q), flip(2, 2, q);
        swap.at(0, 1) = swap.at(1, 0) = FieldScalar::one(q);
        flip.at(0, 0) = FieldScalar::one(q);
        flip.at(1, 1) = FieldScalar::from_int(-1, q);
        auto [group, rep] = close_generators({swap, flip});
        REQUIRE(group->order() == 8);
        int s1 = -1, s2 = -1;
        for (int g = 0; g < 8; ++g) {
            if (rep->matrix(g) == swap) s1 = g;
            if (rep->matrix(g) == flip) s2 = g;
        }
        LambdaParam lambda = build_lambda_coxeter(
            rep, {s1, s2},
            {{FieldScalar::one(q), FieldScalar::from_int(-1, q)},
             {FieldScalar::zero(q), FieldScalar::one(q)}},
            {FieldScalar::one(q), FieldScalar::one(q)});
        REQUIRE(check_pbw(lambda, KappaParam::zero(rep), rep).pass());
        ConversionIso iso = build_conversion_iso(lambda);
        CHECK(check_pbw(LambdaParam::zero(rep), iso.kappa, rep).pass());
    }
}
