#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pbwdeform/group.hpp"
#include "pbwdeform/instance.hpp"

using namespace pbwdeform;

static std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return t;
}

TEST_CASE("cyclic multiplication tables pass validation") {
    for (int n : {1, 2, 3, 5, 6}) {
        FiniteGroup g(cyclic_table(n));
        CHECK(g.order() == n);
        CHECK(g.identity() == 0);
        for (int a = 0; a < n; ++a) CHECK(g.mul(a, g.inv(a)) == 0);
        // Abelian: every conjugacy class is a singleton.
        CHECK(static_cast<int>(g.conjugacy_classes().size()) == n);
    }
}

TEST_CASE("broken tables are rejected") {
    auto t = cyclic_table(3);
    t[1][2] = 1;  // no longer a latin square / associative
    CHECK_THROWS(FiniteGroup(t));
    CHECK_THROWS(FiniteGroup({{0, 1}, {1, 1}}));
    CHECK_THROWS(FiniteGroup({{0, 1}}));  // not square
}

TEST_CASE("generator closure recovers S3 with its class structure") {
    Field q{0};
    Matrix s1(2, 2, q), s2(2, 2, q);
    s1.at(0, 0) = FieldScalar::from_int(-1, q);
    s1.at(0, 1) = FieldScalar::one(q);
    s1.at(1, 1) = FieldScalar::one(q);
    s2.at(0, 0) = FieldScalar::one(q);
    s2.at(1, 0) = FieldScalar::one(q);
    s2.at(1, 1) = FieldScalar::from_int(-1, q);
    auto [group, rep] = close_generators({s1, s2});
    CHECK(group->order() == 6);
    CHECK(rep->dim() == 2);
    // 3 classes of sizes 1, 3, 2.
    std::vector<std::size_t> sizes;
    for (const auto& cl : group->conjugacy_classes()) sizes.push_back(cl.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 2, 3});
    for (int g = 0; g < 6; ++g)
        for (int h = 0; h < 6; ++h)
            CHECK(rep->matrix(group->mul(g, h)) == rep->matrix(g) * rep->matrix(h));
}

TEST_CASE("closure cap triggers on infinite groups") {
    Field q{0};
    Matrix shear(2, 2, q);
    shear.at(0, 0) = shear.at(1, 1) = FieldScalar::one(q);
    shear.at(0, 1) = FieldScalar::one(q);
    CHECK_THROWS(close_generators({shear}, 64));
}

TEST_CASE("element classification and fixed spaces") {
    {
        auto rep = corpus_get("s3-coxeter-q").rep;
        const auto& G = rep->group();
        int reflections = 0, rotations = 0;
        for (int g = 0; g < G.order(); ++g) {
            FixedSpace fs = fixed_space(*rep, g);
            ElementClass cls = classify_element(*rep, g);
            if (g == G.identity()) {
                CHECK(cls == ElementClass::IdentityAction);
                CHECK(fs.codim == 0);
            } else if (cls == ElementClass::Reflection) {
                CHECK(fs.codim == 1);
                CHECK(fs.basis.size() == 1);
                ++reflections;
            } else {
                CHECK(fs.codim == 2);
                ++rotations;
            }
        }
        CHECK(reflections == 3);
        CHECK(rotations == 2);
    }
    {
        // Unipotent p-action: rho(g) - I is nilpotent, fixed space is a line
        // but no eigenvalue -1, so non-identity elements are reflections in
        // the transvection sense.
        auto rep = corpus_get("cyclic-p3").rep;
        for (int g = 1; g < 3; ++g) {
            CHECK(classify_element(*rep, g) == ElementClass::Reflection);
            CHECK(fixed_space(*rep, g).codim == 1);
        }
    }
}

TEST_CASE("act_on_basis matches matrix columns") {
    auto rep = corpus_get("cyclic-p2").rep;
    auto col = rep->act_on_basis(1, 1);  // ^g w = v + w in the unipotent action
    REQUIRE(col.size() == 2);
    CHECK(col[0] == FieldScalar::one(rep->field()));
    CHECK(col[1] == FieldScalar::one(rep->field()));
}
