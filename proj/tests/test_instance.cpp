#include <sstream>

#include "doctest.h"
#include "rsabc/instance.hpp"
#include "test_support.hpp"

using namespace rsabc;

TEST_CASE("parse builds INST-A from text") {
    std::istringstream in(
        "# name: INST-A\n"
        "rsa 3 3 1 3\n"
        "arc 0 1\narc 1 2\narc 0 2\n"
        "demand 0 2 2\n");
    Instance inst = parse_instance(in);
    CHECK(inst.name == "INST-A");
    CHECK(inst.graph.arc_count() == 3);
    CHECK(inst.demands.size() == 1);
    CHECK(inst == testsup::inst_a());
}

TEST_CASE("parse rejects volume above the slot count") {
    std::istringstream in("rsa 2 1 1 3\narc 0 1\ndemand 0 1 4\n");
    CHECK_THROWS_WITH_AS(parse_instance(in), doctest::Contains("volume exceeds slots"),
                         SemanticError);
}

TEST_CASE("parse rejects self-loops") {
    std::istringstream in("rsa 2 1 1 3\narc 0 0\ndemand 0 1 1\n");
    CHECK_THROWS_WITH_AS(parse_instance(in), doctest::Contains("self-loop"), SemanticError);
}

TEST_CASE("parse rejects duplicate arcs and dangling ids") {
    std::istringstream dup("rsa 2 2 1 3\narc 0 1\narc 0 1\ndemand 0 1 1\n");
    CHECK_THROWS_AS(parse_instance(dup), SemanticError);
    std::istringstream dangling("rsa 2 1 1 3\narc 0 5\ndemand 0 1 1\n");
    CHECK_THROWS_AS(parse_instance(dangling), SemanticError);
}

TEST_CASE("parse reports the offending line") {
    std::istringstream in("rsa 2 1 1 3\nbogus 0 1\ndemand 0 1 1\n");
    try {
        parse_instance(in);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("serialize/parse round trip") {
    for (const Instance& inst :
         {testsup::inst_a(), testsup::inst_b(), testsup::inst_c(),
          generate_instance({6, 0.4, 3, 1, 4, 6, 99, 1000})}) {
        std::istringstream in(serialize_instance(inst));
        Instance back = parse_instance(in);
        CHECK(back == inst);
        std::istringstream in2(serialize_instance(back));
        CHECK(parse_instance(in2) == inst);
    }
}

TEST_CASE("fixture files parse") {
    CHECK(parse_instance_file(testsup::fixture("inst-a.rsa")) == testsup::inst_a());
    CHECK(parse_instance_file(testsup::fixture("inst-b.rsa")) == testsup::inst_b());
    CHECK(parse_instance_file(testsup::fixture("inst-c.rsa")) == testsup::inst_c());
    CHECK(parse_instance_file(testsup::fixture("ring5.rsa")).graph.arc_count() == 10);
    CHECK(parse_instance_file(testsup::fixture("grid2x2.rsa")).graph.node_count() == 4);
}

TEST_CASE("generator is deterministic per seed") {
    GeneratorParams p{5, 0.5, 2, 1, 3, 6, 1, 1000};
    Instance a = generate_instance(p);
    Instance b = generate_instance(p);
    CHECK(serialize_instance(a) == serialize_instance(b));
    p.seed = 2;
    CHECK(serialize_instance(generate_instance(p)) != serialize_instance(a));
}

TEST_CASE("generated volumes are uniform") {
    // 10000 draws over [1,4]; every frequency within 5% of 1/4.
    GeneratorParams p{5, 0.9, 10000, 1, 4, 6, 424242, 1000};
    Instance inst = generate_instance(p);
    int count[5] = {0, 0, 0, 0, 0};
    for (const Demand& d : inst.demands) ++count[d.volume];
    for (int v = 1; v <= 4; ++v) {
        double freq = count[v] / 10000.0;
        CHECK(std::abs(freq - 0.25) <= 0.0125);
    }
}

TEST_CASE("generator fails on graphs too sparse to connect") {
    GeneratorParams p{4, 0.05, 3, 1, 2, 4, 3, 50};
    int failures = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        p.seed = seed;
        try {
            generate_instance(p);
        } catch (const GeneratorError&) {
            ++failures;
        }
    }
    CHECK(failures >= 5);
}

TEST_CASE("generated demands always have a connecting path") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        GeneratorParams p{6, 0.3, 3, 1, 4, 6, seed, 2000};
        Instance inst;
        try {
            inst = generate_instance(p);
        } catch (const GeneratorError&) {
            continue;
        }
        for (const Demand& d : inst.demands) CHECK(inst.graph.has_path(d.source, d.target));
    }
}

TEST_CASE("canonical feasibility checks") {
    Instance b = testsup::inst_b();
    CanonicalSolution ok{{{{0}, 1}, {{0}, 3}}};
    CHECK(check_canonical_feasible(b, ok).feasible);

    CanonicalSolution overlap{{{{0}, 1}, {{0}, 2}}};
    FeasibilityReport rep = check_canonical_feasible(b, overlap);
    CHECK_FALSE(rep.feasible);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].find("overlap") != std::string::npos);

    Instance a = testsup::inst_a();
    CHECK(check_canonical_feasible(a, {{{{2}, 1}}}).feasible);
    CHECK_FALSE(check_canonical_feasible(a, {{{{2}, 3}}}).feasible);  // interval ends at 4 > 3
    CHECK_FALSE(check_canonical_feasible(a, {{{{0}, 1}}}).feasible);  // path ends at node 1
    CHECK_FALSE(check_canonical_feasible(a, {{{{1, 0}, 1}}}).feasible);  // arcs do not chain
}

TEST_CASE("wrong assignment count is reported") {
    FeasibilityReport rep = check_canonical_feasible(testsup::inst_b(), {{{{0}, 1}}});
    CHECK_FALSE(rep.feasible);
}
