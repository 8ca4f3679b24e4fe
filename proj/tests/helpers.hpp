#pragma once

#include <cstdlib>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "domivar/analysis.hpp"
#include "domivar/behavioral.hpp"
#include "domivar/io.hpp"
#include "domivar/solver.hpp"

namespace testutil {

namespace dv = domivar;

inline std::string instance_path(const std::string& name) {
    return std::string(DOMIVAR_INSTANCE_DIR) + "/" + name;
}

inline dv::LoadedInstance load(const std::string& name) {
    return dv::load_instance_file(instance_path(name));
}

/// Seed for randomized corpora; override with DOMIVAR_SEED.
inline std::uint64_t test_seed() {
    if (const char* env = std::getenv("DOMIVAR_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 20260809ULL;
}

inline std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

inline dv::SetTemplate pareto2() {
    dv::SetTemplate t;
    t.halfspaces = {{{1.0, 0.0}, 0.0}, {{0.0, 1.0}, 0.0}};
    return t;
}

/// Halfspace template of the 2-D cone between counterclockwise angles
/// lo < hi (radians, hi - lo < pi).
inline dv::SetTemplate cone_template(double lo, double hi) {
    dv::Vec r1{std::cos(lo), std::sin(lo)};
    dv::Vec r2{std::cos(hi), std::sin(hi)};
    dv::SetTemplate t;
    t.halfspaces = {{{-r1[1], r1[0]}, 0.0}, {{r2[1], -r2[0]}, 0.0}};
    return t;
}

inline dv::DominationStructure constant_structure(dv::SetTemplate t) {
    return dv::DominationStructure({}, std::move(t), 2);
}

inline dv::ProblemInstance build_instance(std::vector<std::string> labels,
                                          std::vector<dv::Vec> coords,
                                          std::vector<dv::Vec> payoffs,
                                          dv::DominationStructure structure,
                                          dv::QuasimetricSpec qm, dv::Vec k, double eps,
                                          const std::string& x0) {
    dv::ProblemInstance inst;
    inst.name = "test";
    inst.dimension = k.size();
    std::map<std::string, dv::Vec> table;
    for (std::size_t i = 0; i < labels.size(); ++i) table[labels[i]] = payoffs[i];
    inst.ground = dv::GroundSet::finite(std::move(labels), std::move(coords));
    inst.objective = dv::Objective::table(std::move(table));
    inst.structure = std::move(structure);
    inst.quasimetric = std::move(qm);
    inst.k = std::move(k);
    inst.epsilon = eps;
    inst.x0 = inst.ground.index_of(x0);
    inst.finalize();
    return inst;
}

/// The chain fixture used across the solver examples, built in memory.
inline dv::ProblemInstance chain_instance(double eps = 1.0) {
    return build_instance({"1", "2", "3"}, {{1.0}, {2.0}, {3.0}},
                          {{4.0, 4.0}, {2.0, 2.0}, {0.0, 0.0}}, constant_structure(pareto2()),
                          {dv::WeightedAsymmetric{{1.0}, {1.0}}}, {1.0, 1.0}, eps, "1");
}

enum class Family { ConstantCone, NestedMin, TwoRegion };

/// Random finite 2-D instance. Cones always contain k = (1,1) strictly.
/// ConstantCone and NestedMin satisfy the nondominated variant's structural
/// assumptions as well (NestedMin picks x0 at the smallest min-payoff so every
/// domination set sits inside Theta).
inline dv::ProblemInstance random_instance(std::mt19937_64& rng, Family family, std::size_t n) {
    std::uniform_real_distribution<double> payoff(-5.0, 5.0);
    std::uniform_real_distribution<double> weight(0.1, 2.0);
    std::uniform_real_distribution<double> lo_ang(-0.95, 0.45);  // radians, below pi/4
    std::uniform_real_distribution<double> hi_ang(1.15, 2.0);    // above pi/4
    std::uniform_real_distribution<double> eps_pick(0.25, 2.25);

    std::vector<std::string> labels;
    std::vector<dv::Vec> coords;
    std::vector<dv::Vec> payoffs;
    std::size_t width = std::to_string(n - 1).size();
    for (std::size_t i = 0; i < n; ++i) {
        std::string num = std::to_string(i);
        labels.push_back("p" + std::string(width - num.size(), '0') + num);
        coords.push_back({static_cast<double>(i)});
        payoffs.push_back({payoff(rng), payoff(rng)});
    }

    dv::DominationStructure structure;
    std::string x0 = labels[0];
    switch (family) {
        case Family::ConstantCone:
            structure = constant_structure(cone_template(lo_ang(rng), hi_ang(rng)));
            break;
        case Family::NestedMin: {
            double c = 0.5 + 2.5 * weight(rng);
            std::string a = "min(y[0],y[1])";
            std::string s = "1/2 + " + a + "/(2*abs(" + a + ")+" + fmt(c) + ")";
            dv::SetTemplate t;
            t.generator_exprs = {{dv::Expr::parse("1", "y"), dv::Expr::parse(s, "y")},
                                 {dv::Expr::parse(s, "y"), dv::Expr::parse("1", "y")}};
            structure = dv::DominationStructure({}, std::move(t), 2);
            std::size_t best = 0;
            for (std::size_t i = 1; i < n; ++i) {
                if (std::min(payoffs[i][0], payoffs[i][1]) <
                    std::min(payoffs[best][0], payoffs[best][1])) {
                    best = i;
                }
            }
            x0 = labels[best];
            break;
        }
        case Family::TwoRegion: {
            std::vector<dv::DominationRule> rules;
            rules.push_back({dv::Predicate::parse("y[0] < " + fmt(payoff(rng)), "y"),
                             cone_template(lo_ang(rng), hi_ang(rng))});
            structure = dv::DominationStructure(std::move(rules),
                                                cone_template(lo_ang(rng), hi_ang(rng)), 2);
            break;
        }
    }

    dv::QuasimetricSpec qm{dv::WeightedAsymmetric{{weight(rng)}, {weight(rng)}}};
    return build_instance(std::move(labels), std::move(coords), std::move(payoffs),
                          std::move(structure), std::move(qm), {1.0, 1.0}, eps_pick(rng), x0);
}

}  // namespace testutil
