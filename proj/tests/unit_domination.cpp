#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "domivar/domination.hpp"
#include "helpers.hpp"

using namespace domivar;

namespace {

/// D(a,a) of the shrinking-cone structure: cone{(1,s),(s,1)},
/// s = 1/2 + a/(2|a|+1).
double diag_s(double a) { return 0.5 + a / (2.0 * std::fabs(a) + 1.0); }

}  // namespace

TEST_CASE("evaluate follows first-match rule order") {
    LoadedInstance ex = testutil::load("three_cones.json");
    const DominationStructure& st = ex.instance.structure;

    DomSet a1 = st.evaluate({0.0, 0.0});
    for (const Vec& d : {Vec{1.0, 0.0}, Vec{0.0, 1.0}, Vec{2.0, 3.0}}) CHECK(a1.contains(d));
    CHECK(!a1.contains({-1.0, 0.0}));

    // D(A2) spans the halfplane y1 >= y2; verify via cone membership sampling.
    DomSet a2 = st.evaluate({4.0, -2.0});
    GeneratorCone gens{{{1.0, 0.0}, {1.0, 1.0}, {-1.0, -1.0}}};
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    for (int it = 0; it < 200; ++it) {
        Vec d{coord(rng), coord(rng)};
        REQUIRE(a2.contains(d) == cone_contains(gens, d));
    }
}

TEST_CASE("overlapping rules resolve by order, first match wins") {
    std::vector<DominationRule> rules;
    rules.push_back({Predicate::parse("y[0] >= 0", "y"), testutil::cone_template(0.2, 1.2)});
    rules.push_back({Predicate::parse("y[0] >= -1", "y"), testutil::cone_template(-0.5, 0.5)});
    DominationStructure st(std::move(rules), testutil::pareto2(), 2);

    // (0.5, 0) matches both rules; the first one owns it
    DomSet first = st.evaluate({0.5, 0.0});
    DomSet second = st.evaluate({-0.5, 0.0});
    DomSet fallback = st.evaluate({-2.0, 0.0});
    CHECK(first.contains({std::cos(0.7), std::sin(0.7)}));
    CHECK(!first.contains({1.0, 0.0}));
    CHECK(second.contains({1.0, 0.0}));
    CHECK(fallback.contains({0.0, 1.0}));
    CHECK(!fallback.contains({0.5, -0.1}));
}

TEST_CASE("expression templates instantiate per payoff") {
    LoadedInstance ex = testutil::load("shrinking_cones.json");
    DomSet at_zero = ex.instance.structure.evaluate({0.0, 0.0});
    REQUIRE(at_zero.gens.has_value());
    REQUIRE(at_zero.gens->generators.size() == 2);
    CHECK(at_zero.gens->generators[0] == Vec{1.0, 0.5});
    CHECK(at_zero.gens->generators[1] == Vec{0.5, 1.0});
}

TEST_CASE("binary relations on the three-cones instance") {
    LoadedInstance ex = testutil::load("three_cones.json");
    const DominationStructure& st = ex.instance.structure;
    Vec f1{0.0, 0.0}, f2{4.0, -2.0}, f3{-2.0, 1.0};

    CHECK(leq_N(st, f3, f1));   // (2,-1) in cone{(0,-1),(1,1)}
    CHECK(!leq_N(st, f1, f3));  // (-2,1) not in the Pareto cone
    CHECK(leq_N(st, f2, f2));

    CHECK(leq_E(st, f1, f2));   // (4,-2) in the halfplane y1 >= y2
    CHECK(!leq_E(st, f1, f3));  // (-2,1) not in D(f(3))
    CHECK(leq_E(st, f3, f3));
}

TEST_CASE("constant structures collapse the two relations") {
    DominationStructure st = testutil::constant_structure(testutil::cone_template(-0.4, 1.3));
    std::mt19937_64 rng(testutil::test_seed());
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    for (int it = 0; it < 1000; ++it) {
        Vec v{coord(rng), coord(rng)}, y{coord(rng), coord(rng)};
        REQUIRE(leq_N(st, v, y) == leq_E(st, v, y));
    }
}

TEST_CASE("shrinking-cone monotonicity: D(a,a) inside D(b,b) for a >= b") {
    LoadedInstance ex = testutil::load("shrinking_cones.json");
    const DominationStructure& st = ex.instance.structure;
    std::mt19937_64 rng(testutil::test_seed() + 5);
    std::uniform_real_distribution<double> val(-3.0, 3.0);
    for (int it = 0; it < 100; ++it) {
        double a = val(rng), b = val(rng);
        if (a < b) std::swap(a, b);
        DomSet da = st.evaluate({a, a});
        DomSet db = st.evaluate({b, b});
        for (const Vec& g : da.generator_list()) {
            REQUIRE(db.contains(g));
        }
        // spot-check the closed form of the generator slope
        REQUIRE(da.gens->generators[0][1] == doctest::Approx(diag_s(a)));
    }
}

TEST_CASE("subset_cone") {
    DomSet small;
    small.gens = GeneratorCone{{{1.0, 0.0}, {1.0, 1.0}}};
    small.half = generators_to_halfspaces_2d(*small.gens);
    DomSet pareto;
    pareto.half = PolyhedralSet{{{{1.0, 0.0}, 0.0}, {{0.0, 1.0}, 0.0}}};

    CHECK(subset_cone(small, pareto).subset);
    SubsetResult rev = subset_cone(pareto, small);
    REQUIRE(!rev.subset);
    REQUIRE(rev.witness.has_value());
    CHECK(pareto.contains(*rev.witness));
    CHECK(!small.contains(*rev.witness));
}

TEST_CASE("subset_cone falls back to the LP witness search in dimension 3") {
    DomSet octant;
    octant.half =
        PolyhedralSet{{{{1.0, 0.0, 0.0}, 0.0}, {{0.0, 1.0, 0.0}, 0.0}, {{0.0, 0.0, 1.0}, 0.0}}};
    DomSet halfspace;
    halfspace.half = PolyhedralSet{{{{1.0, 1.0, 1.0}, 0.0}}};

    CHECK(subset_cone(octant, halfspace).subset);
    SubsetResult rev = subset_cone(halfspace, octant);
    REQUIRE(!rev.subset);
    REQUIRE(rev.witness.has_value());
    CHECK(halfspace.contains(*rev.witness));
    CHECK(!octant.contains(*rev.witness));

    // scalarization in dimension 3 uses the same ratio formula
    ScalarizationSpec s{*octant.half, {1.0, 1.0, 1.0}};
    CHECK(gerstewitz(s, {3.0, -1.0, 2.0}) == doctest::Approx(3.0));
}

TEST_CASE("check_F3 on the shrinking-cone instance") {
    LoadedInstance ex = testutil::load("shrinking_cones.json");
    F3Report rep = check_F3(ex.instance.structure, ex.instance, 500);
    CHECK(rep.a_pass);
    CHECK(rep.b_pass);
    CHECK(rep.c_pass);
    CHECK(rep.c_tested > 0);
    CHECK(rep.d_pass);
}

TEST_CASE("check_F3 flags the three-cones structure against the Pareto Theta") {
    LoadedInstance ex = testutil::load("three_cones.json");
    F3Report rep = check_F3(ex.instance.structure, ex.instance, 200);
    CHECK(!rep.d_pass);  // generator (0,-1) of D(f(3)) leaves the Pareto cone
    REQUIRE(!rep.d_witnesses.empty());
    bool names_point_3 = false;
    for (const std::string& w : rep.d_witnesses) {
        if (w.find("D(f(3))") != std::string::npos && w.find("(0, -1)") != std::string::npos) {
            names_point_3 = true;
        }
    }
    CHECK(names_point_3);
}

TEST_CASE("check_F3 passes for a constant Pareto structure") {
    testutil::dv::ProblemInstance chain = testutil::chain_instance();
    F3Report rep = check_F3(chain.structure, chain, 200);
    CHECK(rep.a_pass);
    CHECK(rep.b_pass);
    CHECK(rep.c_pass);
    CHECK(rep.d_pass);
}

TEST_CASE("evaluate rejects vanishing generators and missing defaults") {
    SetTemplate t;
    t.generator_exprs = {{Expr::parse("y[0]", "y"), Expr::parse("y[1]", "y")}};
    DominationStructure st({}, t, 2);
    CHECK_THROWS_AS(st.evaluate({0.0, 0.0}), std::domain_error);
    CHECK_THROWS(DominationStructure({}, SetTemplate{}, 2));
}
