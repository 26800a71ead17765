#include <sstream>

#include "doctest.h"
#include "rsabc/model.hpp"
#include "rsabc/oracle.hpp"
#include "test_support.hpp"

using namespace rsabc;

TEST_CASE("variable space linearization") {
    VarSpace v{2, 3, 4};
    CHECK(v.count() == 24);
    CHECK(v.index(0, 0, 1) == 0);
    CHECK(v.index(1, 2, 4) == 23);
    for (int d = 0; d < 2; ++d)
        for (int e = 0; e < 3; ++e)
            for (int s = 1; s <= 4; ++s) {
                int i = v.index(d, e, s);
                CHECK(i == ((d * 3) + e) * 4 + (s - 1));
                CHECK(v.demand_of(i) == d);
                CHECK(v.arc_of(i) == e);
                CHECK(v.slot_of(i) == s);
            }
}

TEST_CASE("model row counts for INST-B") {
    Model m = build_model(testsup::inst_b());
    CHECK(m.vars.count() == 6);
    CHECK(m.count_rows("clash") == 3);
    CHECK(m.count_rows("contiguity") == 6);
    CHECK(m.count_rows("sourceVolume") == 2);
    CHECK(m.count_rows("flowConservation") == 0);
}

TEST_CASE("model row counts for INST-A") {
    Model m = build_model(testsup::inst_a());
    CHECK(m.vars.count() == 9);
    CHECK(m.count_rows("flowConservation") == 3);  // one intermediate node, three slots
    CHECK(m.count_rows("clash") == 9);
    CHECK(m.count_rows("contiguity") == 9);
}

TEST_CASE("static optimality rows are optional") {
    Model plain = build_model(testsup::inst_a());
    CHECK(plain.count_rows("noOutFromDst") == 0);
    CHECK(plain.count_rows("contiguityEqs") == 0);
    Model with = build_model(testsup::inst_a(), {true});
    CHECK(with.count_rows("noOutFromDst") == 1);
    CHECK(with.count_rows("contiguityEqs") == 2 * 3);  // v=2 residues x three arcs
}

TEST_CASE("embedding the INST-A optimum") {
    Instance a = testsup::inst_a();
    Model m = build_model(a, {true});
    CanonicalSolution sol{{{{2}, 1}}};
    FractionalPoint x = embed_canonical(a, sol);
    int set = 0;
    for (double v : x) set += v == 1.0;
    CHECK(set == 2);
    CHECK(objective_value(m, x) == doctest::Approx(1.0));
    for (const auto& row : m.rows) CHECK(evaluate_row(row, x).violation < 1e-9);
}

TEST_CASE("embedding the INST-B optimum") {
    Instance b = testsup::inst_b();
    Model m = build_model(b);
    FractionalPoint x = embed_canonical(b, {{{{0}, 1}, {{0}, 3}}});
    int set = 0;
    for (double v : x) set += v == 1.0;
    CHECK(set == 3);
    CHECK(objective_value(m, x) == doctest::Approx(2.0));
}

TEST_CASE("embedding rejects infeasible solutions") {
    CHECK_THROWS_AS(embed_canonical(testsup::inst_b(), {{{{0}, 1}, {{0}, 2}}}), SemanticError);
}

TEST_CASE("evaluate_row violations by sense") {
    RowBuilder rb("t", Sense::le, 1.0);
    rb.add(0, 1.0);
    rb.add(1, 1.0);
    LinearRow row = rb.build();
    FractionalPoint x{0.7, 0.7};
    RowEval ev = evaluate_row(row, x);
    CHECK(ev.lhs == doctest::Approx(1.4));
    CHECK(ev.violation == doctest::Approx(0.4));

    row.sense = Sense::eq;
    row.rhs = 1.4;
    CHECK(evaluate_row(row, x).violation == doctest::Approx(0.0));

    RowBuilder ge("t", Sense::ge, 5.0);
    ge.add(0, 1.0);
    LinearRow grow = ge.build();
    CHECK(evaluate_row(grow, {3.0, 0.0}).violation == doctest::Approx(2.0));
}

TEST_CASE("evaluate_row rejects out-of-range variables") {
    RowBuilder rb("t", Sense::le, 1.0);
    rb.add(5, 1.0);
    CHECK_THROWS_AS(evaluate_row(rb.build(), FractionalPoint{0.0}), std::out_of_range);
}

TEST_CASE("row builder merges duplicates and drops zeros") {
    RowBuilder rb("t", Sense::le, 0.0);
    rb.add(3, 1.0);
    rb.add(3, 2.0);
    rb.add(1, 0.5);
    rb.add(1, -0.5);
    LinearRow row = rb.build();
    REQUIRE(row.coeffs.size() == 1);
    CHECK(row.coeffs[0] == std::pair<int, double>{3, 3.0});
}

TEST_CASE("contiguity at the last slot drops the fictitious term") {
    // v(d)*u_{de,sbar} <= sum_{f..sbar} u: for INST-B demand 0 (v=2) the
    // s=3 row reads 2*u3 - u2 - u3 <= 0.
    Model m = build_model(testsup::inst_b());
    VarSpace v = m.vars;
    FractionalPoint x(v.count(), 0.0);
    x[v.index(0, 0, 3)] = 1.0;  // only the last slot: violates contiguity
    bool violated = false;
    for (const auto& row : m.rows)
        if (row.tag == "contiguity" && evaluate_row(row, x).violation > 1e-9) violated = true;
    CHECK(violated);
    x[v.index(0, 0, 2)] = 1.0;  // block [2,3] restores feasibility of (6)
    for (const auto& row : m.rows)
        if (row.tag == "contiguity") CHECK(evaluate_row(row, x).violation < 1e-9);
}

TEST_CASE("contiguity equations on blocks") {
    // v=2, sbar=4: i=1 reads u1+u3 = u2+u4; a [2,3] block balances it.
    Instance inst = testsup::single_arc({2}, 4);
    auto rows = contiguity_eq_rows(inst);
    REQUIRE(rows.size() == 2);
    VarSpace v{1, 1, 4};
    FractionalPoint x(v.count(), 0.0);
    x[v.index(0, 0, 2)] = x[v.index(0, 0, 3)] = 1.0;
    for (const auto& row : rows) CHECK(evaluate_row(row, x).violation < 1e-9);
    // volume-1 demands produce no equations
    CHECK(contiguity_eq_rows(testsup::single_arc({1}, 4)).empty());
}

TEST_CASE("embedded canonical solutions satisfy every model row") {
    // property over random micro instances
    int tested = 0;
    for (std::uint64_t seed = 1; seed < 60 && tested < 8; ++seed) {
        GeneratorParams p{5, 0.4, 2, 1, 3, 5, seed, 500};
        Instance inst;
        try {
            inst = generate_instance(p);
        } catch (const GeneratorError&) {
            continue;
        }
        OracleEnumeration e;
        try {
            e = enumerate_canonical(inst);
        } catch (const EnumerationLimitError&) {
            continue;
        }
        if (e.solutions.empty()) continue;
        ++tested;
        Model m = build_model(inst, {true});
        for (std::size_t i = 0; i < e.solutions.size(); i += 7) {
            FractionalPoint x = embed_canonical(inst, e.solutions[i]);
            for (const auto& row : m.rows) CHECK(evaluate_row(row, x).violation < 1e-9);
            CHECK(objective_value(m, x) ==
                  doctest::Approx(total_path_arcs(e.solutions[i])).epsilon(1e-9));
        }
    }
    CHECK(tested >= 5);
}

TEST_CASE("model dump format") {
    Model m = build_model(testsup::inst_b());
    std::ostringstream ss;
    dump_model(m, ss);
    CHECK(ss.str().find("clash: + u[0,0,1] + u[1,0,1] <= 1") != std::string::npos);
}
