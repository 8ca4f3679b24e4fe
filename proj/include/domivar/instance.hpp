#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "domivar/domination.hpp"
#include "domivar/expr.hpp"
#include "domivar/geometry.hpp"
#include "domivar/quasimetric.hpp"

namespace domivar {

/// Objective f mapping decision points to payoff vectors: either a per-label
/// table (finite grounds) or ordered piecewise rules over x-coordinates.
class Objective {
  public:
    struct Rule {
        Predicate when;
        std::vector<Expr> value;
    };

    static Objective table(std::map<std::string, Vec> values);
    static Objective piecewise(std::vector<Rule> rules, std::vector<Expr> default_value);

    Vec eval(const std::string& label, const Vec& coords) const;
    bool is_table() const { return !table_.empty(); }
    const std::map<std::string, Vec>& table_values() const { return table_; }
    const std::vector<Rule>& rules() const { return rules_; }
    const std::vector<Expr>& default_value() const { return default_; }

  private:
    std::map<std::string, Vec> table_;
    std::vector<Rule> rules_;
    std::vector<Expr> default_;
};

struct Tolerances {
    double tol_geo = kTolGeo;
    double tol_lp = kTolLp;
    double tol_eq = kTolEq;
    std::size_t max_iter = 10000;
};

/// A fully validated problem: ground set, objective, domination structure,
/// quasimetric, scalarization direction k, radius epsilon and start x0.
/// Payoffs are evaluated once at construction; f must be total and finite.
struct ProblemInstance {
    std::string name;
    std::size_t dimension = 0;  // payoff dimension m
    GroundSet ground;
    Objective objective;
    DominationStructure structure;
    QuasimetricSpec quasimetric;
    Vec k;
    double epsilon = 0.0;
    std::size_t x0 = 0;
    std::string notes;
    Tolerances tol;

    std::vector<Vec> payoffs;  // payoffs[i] = f(ground point i)

    const Vec& f(std::size_t i) const { return payoffs[i]; }
    double qdist(std::size_t x, std::size_t u) const { return q(quasimetric, ground, x, u); }
    double xi() const { return std::sqrt(epsilon); }
    DomSet dom_at(std::size_t i) const { return structure.evaluate(payoffs[i]); }

    /// Evaluates payoffs and validates totality, dimensions, k != 0, x0
    /// membership and (for table quasimetrics) the metric axioms. Throws
    /// std::invalid_argument listing every problem found.
    void finalize();
};

/// All domination sets of an instance, evaluated once. Operations that sweep
/// the ground set build this locally instead of re-evaluating templates.
std::vector<DomSet> all_dom_sets(const ProblemInstance& inst);

/// Payoff equality at the instance tolerance (max-norm).
inline bool same_payoff(const ProblemInstance& inst, std::size_t a, std::size_t b) {
    return max_norm(sub(inst.f(a), inst.f(b))) <= inst.tol.tol_eq;
}

}  // namespace domivar
