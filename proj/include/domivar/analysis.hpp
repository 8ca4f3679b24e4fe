#pragma once

#include <string>
#include <vector>

#include "domivar/domination.hpp"
#include "domivar/instance.hpp"

namespace domivar {

/// Per-point solution flags. The strict notions always imply the conventional
/// ones (0 lies in every domination set), which the verifier re-checks.
struct ClassificationRow {
    std::string label;
    bool conventional_nondominated = false;
    bool nondominated = false;
    bool conventional_efficient = false;
    bool efficient = false;
    bool theta_i_minimal = false;
    bool theta_u_minimal = false;
};

/// Intersection and union domination sets for {f, D}. The intersection is a
/// plain halfspace concatenation; the union stays an explicit list of cones
/// (unions of cones are generally nonconvex) with membership = any member.
struct ThetaSets {
    PolyhedralSet theta_i;
    std::vector<DomSet> theta_u;

    bool theta_u_contains(const Vec& d, double tol = kTolGeo) const;
};
ThetaSets theta_sets(const ProblemInstance& instance);

/// Classifies every ground point per the four solution notions plus
/// Theta^i / Theta^u Pareto minimality. Rows come back in label order.
std::vector<ClassificationRow> classify(const ProblemInstance& instance);

/// Pointedness condition at xbar: D(f(x)) cap (-D(f(xbar))) = {0} for all x.
struct PointednessConditionResult {
    bool holds = false;
    std::string witness_label;  // first failing x, when any
    Vec witness_direction;
};
PointednessConditionResult check_pointedness_condition(const ProblemInstance& instance,
                                                       std::size_t xbar);

/// epsilon-k approximate solutions. With epsilon = 0 these reduce to the exact
/// notions. The "\ {0}" exclusions are realized as membership with a nonzero
/// difference (max-norm > tol_eq).
bool epsilon_efficient(const ProblemInstance& instance, std::size_t x, double epsilon, const Vec& k);
bool epsilon_nondominated(const ProblemInstance& instance, std::size_t x, double epsilon,
                          const Vec& k);

/// Weak variant for full-dimensional polyhedral cones only: interior
/// membership is "slack > tol on every halfspace". General interiors are out
/// of scope.
bool epsilon_weakly_efficient(const ProblemInstance& instance, std::size_t x, double epsilon,
                              const Vec& k);

/// Re-checks the relationship propositions row-wise on the instance:
/// strict implies conventional for both notions; D-efficient implies
/// Theta-minimal at Theta = D(f(xbar)); D-nondominated implies Theta^i-minimal;
/// Theta^u-minimal implies D-nondominated; conventional D-efficient implies
/// efficiency for D(ybar) \ (-Theta^u) (checked pointwise over range pairs);
/// and, under the pointedness condition, conventional implies strict.
/// Counterexamples indicate an implementation bug, not a property of the data.
struct PropositionReport {
    bool all_hold = true;
    std::vector<std::string> counterexamples;
    std::size_t pointedness_points = 0;  // points where the pointedness condition holds
};
PropositionReport verify_relationship_propositions(const ProblemInstance& instance);

}  // namespace domivar
