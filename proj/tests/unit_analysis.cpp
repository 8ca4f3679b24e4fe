#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "domivar/analysis.hpp"
#include "helpers.hpp"

using namespace domivar;

namespace {

const ClassificationRow& row_of(const std::vector<ClassificationRow>& rows,
                                const std::string& label) {
    for (const auto& r : rows) {
        if (r.label == label) return r;
    }
    REQUIRE(false);
    return rows.front();
}

}  // namespace

TEST_CASE("classification of the three-cones instance") {
    LoadedInstance ex = testutil::load("three_cones.json");
    std::vector<ClassificationRow> rows = classify(ex.instance);
    REQUIRE(rows.size() == 3);

    CHECK(row_of(rows, "1").efficient);
    CHECK(!row_of(rows, "2").efficient);
    CHECK(row_of(rows, "3").efficient);

    CHECK(!row_of(rows, "1").nondominated);
    CHECK(!row_of(rows, "2").nondominated);
    CHECK(row_of(rows, "3").nondominated);

    CHECK(row_of(rows, "3").theta_i_minimal);

    for (const auto& r : rows) {
        if (r.nondominated) CHECK(r.conventional_nondominated);
        if (r.efficient) CHECK(r.conventional_efficient);
    }
}

TEST_CASE("theta sets of the three-cones instance") {
    LoadedInstance ex = testutil::load("three_cones.json");
    ThetaSets theta = theta_sets(ex.instance);

    // Theta^i = cone{(1,0),(1,1)}: bidirectional sampled membership
    GeneratorCone expect{{{1.0, 0.0}, {1.0, 1.0}}};
    for (int i = 0; i < 32; ++i) {
        for (int j = 0; j < 32; ++j) {
            Vec d{-5.0 + 10.0 * i / 31.0, -5.0 + 10.0 * j / 31.0};
            REQUIRE(contains(theta.theta_i, d) == cone_contains(expect, d));
        }
    }
    CHECK(theta.theta_u_contains({0.0, -1.0}));   // generator of D(f(3))
    CHECK(theta.theta_u_contains({-1.0, -2.0}));  // via the halfplane D(f(2))
    CHECK(!theta.theta_u_contains({-1.0, 2.0}));  // outside all three cones
}

TEST_CASE("theta sets of a constant structure coincide with the cone") {
    testutil::dv::ProblemInstance chain = testutil::chain_instance();
    ThetaSets theta = theta_sets(chain);
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            Vec d{-3.0 + 6.0 * i / 19.0, -3.0 + 6.0 * j / 19.0};
            bool pareto = d[0] >= -1e-9 && d[1] >= -1e-9;
            REQUIRE(contains(theta.theta_i, d) == pareto);
            REQUIRE(theta.theta_u_contains(d) == pareto);
        }
    }
}

TEST_CASE("pointedness condition") {
    SUBCASE("constant Pareto structure") {
        testutil::dv::ProblemInstance chain = testutil::chain_instance();
        for (std::size_t i = 0; i < 3; ++i) CHECK(check_pointedness_condition(chain, i).holds);
    }
    SUBCASE("three-cones instance fails at xbar = 1 with witness 2") {
        LoadedInstance ex = testutil::load("three_cones.json");
        PointednessConditionResult r = check_pointedness_condition(ex.instance, 0);
        CHECK(!r.holds);
        CHECK(r.witness_label == "2");
    }
    SUBCASE("single point") {
        testutil::dv::ProblemInstance one = testutil::build_instance(
            {"x"}, {{0.0}}, {{1.0, 1.0}}, testutil::constant_structure(testutil::pareto2()),
            {testutil::dv::WeightedAsymmetric{{1.0}, {1.0}}}, {1.0, 1.0}, 1.0, "x");
        CHECK(check_pointedness_condition(one, 0).holds);
    }
}

TEST_CASE("approximate efficient solutions") {
    LoadedInstance ex = testutil::load("three_cones.json");
    CHECK(epsilon_efficient(ex.instance, 2, 0.0, ex.instance.k));  // point "3", exact case

    testutil::dv::ProblemInstance chain = testutil::chain_instance();
    CHECK(!epsilon_efficient(chain, 0, 1.0, chain.k));  // f(2) lies below (3,3)
    for (double eps : {0.0, 1.0, 10.0}) CHECK(epsilon_efficient(chain, 2, eps, chain.k));
}

TEST_CASE("weakly approximate efficiency uses strict interior slacks") {
    testutil::dv::ProblemInstance chain = testutil::chain_instance();
    // f(2) = (2,2) sits strictly inside f(1) - k - int(R^2_+)
    CHECK(!epsilon_weakly_efficient(chain, 0, 1.0, chain.k));
    CHECK(epsilon_weakly_efficient(chain, 2, 0.0, chain.k));
    // boundary differences do not count as interior: payoffs on an axis
    testutil::dv::ProblemInstance edge = testutil::build_instance(
        {"a", "b"}, {{0.0}, {1.0}}, {{1.0, 0.0}, {0.0, 0.0}},
        testutil::constant_structure(testutil::pareto2()),
        {testutil::dv::WeightedAsymmetric{{1.0}, {1.0}}}, {1.0, 1.0}, 1.0, "a");
    // f(a) - 0k - f(b) = (1,0): on the boundary of the Pareto cone
    CHECK(epsilon_weakly_efficient(edge, 0, 0.0, edge.k));
    CHECK(!epsilon_efficient(edge, 0, 0.0, edge.k));
}

TEST_CASE("approximate nondominated solutions") {
    LoadedInstance ex = testutil::load("three_cones.json");
    CHECK(epsilon_nondominated(ex.instance, 2, 0.0, ex.instance.k));
    CHECK(!epsilon_nondominated(ex.instance, 0, 0.0, ex.instance.k));

    testutil::dv::ProblemInstance chain = testutil::chain_instance();
    CHECK(epsilon_nondominated(chain, 2, 10.0, chain.k));
}

TEST_CASE("relationship propositions hold on the corpus") {
    for (const char* name : {"three_cones.json", "chain.json", "commute.json",
                             "shrinking_cones.json", "exp_tail.json"}) {
        LoadedInstance ex = testutil::load(name);
        PropositionReport rep = verify_relationship_propositions(ex.instance);
        CAPTURE(name);
        CAPTURE(rep.counterexamples.empty() ? "" : rep.counterexamples[0].c_str());
        CHECK(rep.all_hold);
    }
}

TEST_CASE("relationship propositions hold on random instances") {
    std::mt19937_64 rng(testutil::test_seed() + 17);
    for (int it = 0; it < 50; ++it) {
        testutil::Family family = static_cast<testutil::Family>(it % 3);
        testutil::dv::ProblemInstance inst = testutil::random_instance(rng, family, 5);
        PropositionReport rep = verify_relationship_propositions(inst);
        CAPTURE(it);
        CAPTURE(rep.counterexamples.empty() ? "" : rep.counterexamples[0].c_str());
        REQUIRE(rep.all_hold);
    }
}

TEST_CASE("constant pointed cone collapses conventional and strict notions") {
    std::mt19937_64 rng(testutil::test_seed() + 23);
    testutil::dv::ProblemInstance inst =
        testutil::random_instance(rng, testutil::Family::ConstantCone, 8);
    PropositionReport rep = verify_relationship_propositions(inst);
    CHECK(rep.all_hold);
    CHECK(rep.pointedness_points == 8);
    for (const ClassificationRow& r : classify(inst)) {
        CHECK(r.nondominated == r.conventional_nondominated);
        CHECK(r.efficient == r.conventional_efficient);
        CHECK(r.nondominated == r.efficient);  // constant structure
    }
}

TEST_CASE("classification is label-permutation equivariant") {
    std::mt19937_64 rng(testutil::test_seed() + 29);
    std::uniform_real_distribution<double> payoff(-5.0, 5.0);
    std::vector<Vec> payoffs;
    for (int i = 0; i < 6; ++i) payoffs.push_back({payoff(rng), payoff(rng)});

    auto structure = [] { return testutil::constant_structure(testutil::cone_template(-0.3, 1.4)); };
    testutil::dv::QuasimetricSpec qm{testutil::dv::ScaledMetric{1.0, 2.0}};

    testutil::dv::ProblemInstance a = testutil::build_instance(
        {"A", "B", "C", "D", "E", "F"}, {{0.0}, {1.0}, {2.0}, {3.0}, {4.0}, {5.0}}, payoffs,
        structure(), qm, {1.0, 1.0}, 1.0, "A");
    // same points under permuted labels
    std::vector<Vec> permuted{payoffs[3], payoffs[0], payoffs[5], payoffs[1], payoffs[4], payoffs[2]};
    testutil::dv::ProblemInstance b = testutil::build_instance(
        {"W", "X", "Y", "Z", "U", "V"}, {{3.0}, {0.0}, {5.0}, {1.0}, {4.0}, {2.0}}, permuted,
        structure(), qm, {1.0, 1.0}, 1.0, "X");

    std::vector<ClassificationRow> ra = classify(a);
    std::vector<ClassificationRow> rb = classify(b);
    // map: A->X, B->Z, C->V, D->W, E->U, F->Y
    std::map<std::string, std::string> perm{{"A", "X"}, {"B", "Z"}, {"C", "V"},
                                            {"D", "W"}, {"E", "U"}, {"F", "Y"}};
    for (const auto& r : ra) {
        const ClassificationRow& s = row_of(rb, perm.at(r.label));
        CHECK(r.nondominated == s.nondominated);
        CHECK(r.efficient == s.efficient);
        CHECK(r.conventional_nondominated == s.conventional_nondominated);
        CHECK(r.conventional_efficient == s.conventional_efficient);
        CHECK(r.theta_i_minimal == s.theta_i_minimal);
        CHECK(r.theta_u_minimal == s.theta_u_minimal);
    }
}
