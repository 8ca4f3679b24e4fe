#include "domivar/instance.hpp"

#include <sstream>
#include <stdexcept>

namespace domivar {

Objective Objective::table(std::map<std::string, Vec> values) {
    if (values.empty()) throw std::invalid_argument("objective table: empty");
    Objective o;
    o.table_ = std::move(values);
    return o;
}

Objective Objective::piecewise(std::vector<Rule> rules, std::vector<Expr> default_value) {
    if (default_value.empty()) throw std::invalid_argument("objective: default value required");
    Objective o;
    o.rules_ = std::move(rules);
    o.default_ = std::move(default_value);
    return o;
}

Vec Objective::eval(const std::string& label, const Vec& coords) const {
    if (is_table()) {
        auto it = table_.find(label);
        if (it == table_.end()) {
            throw std::invalid_argument("objective table has no value for \"" + label + "\"");
        }
        return it->second;
    }
    const std::vector<Expr>* value = &default_;
    for (const Rule& r : rules_) {
        if (r.when.eval(coords)) {
            value = &r.value;
            break;
        }
    }
    Vec y(value->size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = (*value)[i].eval(coords);
    return y;
}

void ProblemInstance::finalize() {
    std::vector<std::string> issues;
    if (dimension == 0) issues.push_back("dimension m must be positive");
    if (k.size() != dimension) issues.push_back("k has wrong dimension");
    else if (is_zero(k, tol.tol_eq)) issues.push_back("k must be nonzero");
    if (epsilon < 0.0) issues.push_back("epsilon must be nonnegative");
    if (structure.dim() != dimension) issues.push_back("domination structure dimension mismatch");

    payoffs.clear();
    payoffs.reserve(ground.size());
    for (std::size_t i = 0; i < ground.size(); ++i) {
        try {
            Vec y = objective.eval(ground.label(i), ground.coord(i));
            if (y.size() != dimension) {
                issues.push_back("f(" + ground.label(i) + ") has wrong dimension");
                y.resize(dimension, 0.0);
            } else if (!all_finite(y)) {
                issues.push_back("f(" + ground.label(i) + ") is not finite");
            }
            payoffs.push_back(std::move(y));
        } catch (const std::exception& e) {
            issues.push_back("objective not total: " + std::string(e.what()));
            payoffs.push_back(Vec(dimension, 0.0));
        }
    }

    // Domination structure must be total on the payoff range.
    if (issues.empty()) {
        for (std::size_t i = 0; i < ground.size(); ++i) {
            try {
                (void)structure.evaluate(payoffs[i]);
            } catch (const std::exception& e) {
                issues.push_back("domination structure fails at f(" + ground.label(i) +
                                 "): " + e.what());
                if (issues.size() > 8) break;
            }
        }
    }

    // Table quasimetrics are validated here: a broken table is a hard error
    // because the solver's step bounds presuppose the triangle inequality.
    if (const auto* t = std::get_if<TableQuasimetric>(&quasimetric.kind)) {
        if (t->labels != ground.labels()) {
            issues.push_back("table quasimetric labels must match ground labels in order");
        } else {
            AxiomReport ax = validate_axioms(quasimetric, ground);
            for (const std::string& v : ax.violations) issues.push_back("quasimetric: " + v);
        }
    } else if (const auto* wa = std::get_if<WeightedAsymmetric>(&quasimetric.kind)) {
        const std::size_t d = ground.coord(0).size();
        if (wa->alpha.size() != d || wa->beta.size() != d) {
            issues.push_back("weighted asymmetric quasimetric weight arity != decision dimension");
        }
        for (double w : wa->alpha) {
            if (w < 0.0) issues.push_back("weighted asymmetric quasimetric: negative alpha");
        }
        for (double w : wa->beta) {
            if (w < 0.0) issues.push_back("weighted asymmetric quasimetric: negative beta");
        }
    } else if (const auto* sm = std::get_if<ScaledMetric>(&quasimetric.kind)) {
        if (sm->c < 0.0) issues.push_back("scaled metric: c must be >= 0");
        if (!(sm->p >= 1.0)) issues.push_back("scaled metric: p must be >= 1");
    }

    if (!issues.empty()) {
        std::ostringstream os;
        os << "instance validation failed:";
        for (const std::string& s : issues) os << "\n  - " << s;
        throw std::invalid_argument(os.str());
    }
}

std::vector<DomSet> all_dom_sets(const ProblemInstance& inst) {
    std::vector<DomSet> out;
    out.reserve(inst.ground.size());
    for (std::size_t i = 0; i < inst.ground.size(); ++i) {
        out.push_back(inst.structure.evaluate(inst.payoffs[i]));
    }
    return out;
}

}  // namespace domivar
