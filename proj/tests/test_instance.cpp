#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pbwdeform/instance.hpp"

using namespace pbwdeform;

TEST_CASE("every corpus entry round-trips byte-identically") {
    for (const std::string& name : corpus_names()) {
        INFO(name);
        Instance inst = corpus_get(name);
        std::string text = render_instance(inst);
        Instance back = parse_instance(text);
        CHECK(render_instance(back) == text);
        CHECK(back.name == inst.name);
        CHECK(back.lambda == inst.lambda);
        CHECK(back.kappa == inst.kappa);
        CHECK(back.general_kappa.has_value() == inst.general_kappa.has_value());
        CHECK(instance_digest(back) == instance_digest(inst));
    }
}

TEST_CASE("digests separate distinct instances") {
    CHECK(instance_digest(corpus_get("cyclic-p2")) != instance_digest(corpus_get("cyclic-p3")));
}

TEST_CASE("unknown corpus names raise a listing error") {
    try {
        corpus_get("nope");
        FAIL("expected an error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("cyclic-p2") != std::string::npos);
    }
}

TEST_CASE("parser rejects malformed input with line numbers") {
    auto expect_error = [](const std::string& text, int line) {
        try {
            parse_instance(text);
            FAIL("expected ParseError for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_error("bogus-header 1\nend\n", 1);
    expect_error("pbw-instance 2\nend\n", 1);
    expect_error("pbw-instance 1\nfield 4\nend\n", 2);      // 4 is not prime
    expect_error("pbw-instance 1\nfield Q\nfrobnicate\nend\n", 3);
    // Unprefixed table rows.
    expect_error("pbw-instance 1\nfield 2\ngroup table 2\n0 1\n1 0\nend\n", 4);
    // Scalar in the wrong field.
    expect_error(
        "pbw-instance 1\nfield 2\ngroup table 1\nrow 0\nrepresentation 1\nmatrix 0\nrow 1/2\nend\n",
        7);
}

TEST_CASE("comments and a minimal instance") {
    Instance inst = parse_instance(
        "# trivial setup\n"
        "pbw-instance 1\n"
        "name tiny\n"
        "field 3\n"
        "group table 1\n"
        "row 0\n"
        "representation 1\n"
        "matrix 0\n"
        "row 1\n"
        "end\n");
    CHECK(inst.name == "tiny");
    CHECK(inst.rep->dim() == 1);
    CHECK(inst.rep->group().order() == 1);
    CHECK(inst.lambda == LambdaParam::zero(inst.rep));
}

TEST_CASE("general kappa sections survive the round trip") {
    Instance inst = corpus_get("general-kappa-fix");
    REQUIRE(inst.general_kappa.has_value());
    Instance back = parse_instance(render_instance(inst));
    REQUIRE(back.general_kappa.has_value());
    const GeneralKappaEntry* a = inst.general_kappa->entry(0, 1);
    const GeneralKappaEntry* b = back.general_kappa->entry(0, 1);
    REQUIRE(a != nullptr);
    REQUIRE(b != nullptr);
    CHECK(a->scalar_part == b->scalar_part);
    CHECK(a->vector_part == b->vector_part);
}
