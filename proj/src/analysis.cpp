#include "domivar/analysis.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace domivar {

namespace {

struct DomCache {
    const ProblemInstance& inst;
    std::vector<DomSet> dom;

    explicit DomCache(const ProblemInstance& i) : inst(i), dom(all_dom_sets(i)) {}

    // f(x) <=_N f(xbar): f(xbar) in f(x) + D(f(x))
    bool leq_N(std::size_t x, std::size_t xbar) const {
        return dom[x].contains(sub(inst.f(xbar), inst.f(x)), inst.tol.tol_geo);
    }
    // f(x) <=_E f(xbar): f(x) in f(xbar) - D(f(xbar))
    bool leq_E(std::size_t x, std::size_t xbar) const {
        return dom[xbar].contains(sub(inst.f(xbar), inst.f(x)), inst.tol.tol_geo);
    }
};

}  // namespace

bool ThetaSets::theta_u_contains(const Vec& d, double tol) const {
    for (const DomSet& s : theta_u) {
        if (s.contains(d, tol)) return true;
    }
    return false;
}

ThetaSets theta_sets(const ProblemInstance& instance) {
    ThetaSets out;
    // Repeated evaluations (constant regions, duplicated payoffs) collapse to
    // one member; membership in the union scans members, so this keeps
    // classification quadratic instead of cubic on grids.
    std::set<std::string> seen;
    for (const DomSet& s : all_dom_sets(instance)) {
        if (!seen.insert(dom_key(s)).second) continue;
        const PolyhedralSet& h = s.halfspaces();
        out.theta_i.halfspaces.insert(out.theta_i.halfspaces.end(), h.halfspaces.begin(),
                                      h.halfspaces.end());
        out.theta_u.push_back(s);
    }
    return out;
}

std::vector<ClassificationRow> classify(const ProblemInstance& instance) {
    const std::size_t n = instance.ground.size();
    DomCache cache(instance);
    ThetaSets theta = theta_sets(instance);
    const double tol = instance.tol.tol_geo;

    std::vector<ClassificationRow> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        ClassificationRow& row = rows[i];
        row.label = instance.ground.label(i);
        row.conventional_nondominated = true;
        row.nondominated = true;
        row.conventional_efficient = true;
        row.efficient = true;
        row.theta_i_minimal = true;
        row.theta_u_minimal = true;
        for (std::size_t x = 0; x < n; ++x) {
            if (x == i) continue;
            const bool distinct = !same_payoff(instance, x, i);
            const Vec diff = sub(instance.f(i), instance.f(x));  // f(xbar) - f(x)
            if (distinct) {
                if (cache.leq_N(x, i)) row.nondominated = false;
                if (cache.leq_E(x, i)) row.efficient = false;
                if (contains(theta.theta_i, diff, tol)) row.theta_i_minimal = false;
                if (theta.theta_u_contains(diff, tol)) row.theta_u_minimal = false;
            }
            if (cache.leq_N(x, i) && !cache.leq_N(i, x)) row.conventional_nondominated = false;
            if (cache.leq_E(x, i) && !cache.leq_E(i, x)) row.conventional_efficient = false;
        }
    }
    // Label order; ground enumeration for grids is already lexicographic, and
    // finite grounds keep their declared order only if sorted here.
    std::sort(rows.begin(), rows.end(),
              [](const ClassificationRow& a, const ClassificationRow& b) { return a.label < b.label; });
    return rows;
}

PointednessConditionResult check_pointedness_condition(const ProblemInstance& instance,
                                                       std::size_t xbar) {
    std::vector<DomSet> dom = all_dom_sets(instance);
    const PolyhedralSet& at_xbar = dom[xbar].halfspaces();
    for (std::size_t x = 0; x < instance.ground.size(); ++x) {
        PointednessResult pr = pointedness_pair(dom[x].halfspaces(), at_xbar, instance.tol.tol_lp);
        if (!pr.pointed) {
            return {false, instance.ground.label(x), *pr.witness};
        }
    }
    return {true, "", {}};
}

bool epsilon_efficient(const ProblemInstance& instance, std::size_t x, double epsilon,
                       const Vec& k) {
    std::vector<DomSet> dom = all_dom_sets(instance);
    const Vec shifted = sub(instance.f(x), scale(epsilon, k));
    for (std::size_t u = 0; u < instance.ground.size(); ++u) {
        Vec d = sub(shifted, instance.f(u));
        if (max_norm(d) > instance.tol.tol_eq && dom[x].contains(d, instance.tol.tol_geo)) {
            return false;
        }
    }
    return true;
}

bool epsilon_nondominated(const ProblemInstance& instance, std::size_t x, double epsilon,
                          const Vec& k) {
    std::vector<DomSet> dom = all_dom_sets(instance);
    const Vec shifted = sub(instance.f(x), scale(epsilon, k));
    for (std::size_t u = 0; u < instance.ground.size(); ++u) {
        Vec d = sub(shifted, instance.f(u));
        if (max_norm(d) > instance.tol.tol_eq && dom[u].contains(d, instance.tol.tol_geo)) {
            return false;
        }
    }
    return true;
}

bool epsilon_weakly_efficient(const ProblemInstance& instance, std::size_t x, double epsilon,
                              const Vec& k) {
    const DomSet set = instance.dom_at(x);
    const PolyhedralSet& half = set.halfspaces();
    const Vec shifted = sub(instance.f(x), scale(epsilon, k));
    for (std::size_t u = 0; u < instance.ground.size(); ++u) {
        Vec d = sub(shifted, instance.f(u));
        bool interior = true;
        for (const Halfspace& h : half.halfspaces) {
            if (dot(h.normal, d) - h.offset <= instance.tol.tol_geo) {
                interior = false;
                break;
            }
        }
        if (interior) return false;
    }
    return true;
}

PropositionReport verify_relationship_propositions(const ProblemInstance& instance) {
    PropositionReport rep;
    const std::size_t n = instance.ground.size();
    DomCache cache(instance);
    ThetaSets theta = theta_sets(instance);
    std::vector<ClassificationRow> rows = classify(instance);
    const double tol = instance.tol.tol_geo;

    // Pointedness of a pair only depends on the two sets; memoize by content
    // so structures with few distinct values (grids, constant regions) stay
    // affordable under the all-pairs sweep.
    std::vector<std::string> keys(n);
    for (std::size_t i = 0; i < n; ++i) keys[i] = dom_key(cache.dom[i]);
    std::map<std::pair<std::string, std::string>, bool> pointed_memo;
    auto pair_pointed = [&](std::size_t x, std::size_t xbar) {
        auto key = std::make_pair(keys[x], keys[xbar]);
        auto it = pointed_memo.find(key);
        if (it != pointed_memo.end()) return it->second;
        bool p = pointedness_pair(cache.dom[x].halfspaces(), cache.dom[xbar].halfspaces(),
                                  instance.tol.tol_lp)
                     .pointed;
        pointed_memo.emplace(std::move(key), p);
        return p;
    };
    auto pointedness_holds_at = [&](std::size_t xbar) {
        for (std::size_t x = 0; x < n; ++x) {
            if (!pair_pointed(x, xbar)) return false;
        }
        return true;
    };

    // classify() sorts rows by label; map back to ground indices.
    std::vector<std::size_t> row_of(n);
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[instance.ground.index_of(rows[r].label)] = r;

    auto blame = [&](std::size_t i, const std::string& what) {
        rep.all_hold = false;
        if (rep.counterexamples.size() < 16) {
            rep.counterexamples.push_back(instance.ground.label(i) + ": " + what);
        }
    };

    for (std::size_t i = 0; i < n; ++i) {
        const ClassificationRow& row = rows[row_of[i]];
        // Strict solutions are always conventional ones.
        if (row.nondominated && !row.conventional_nondominated) {
            blame(i, "nondominated but not conventionally nondominated");
        }
        if (row.efficient && !row.conventional_efficient) {
            blame(i, "efficient but not conventionally efficient");
        }
        // Efficiency implies Pareto minimality against the point's own set.
        if (row.efficient) {
            for (std::size_t x = 0; x < n; ++x) {
                if (x == i || same_payoff(instance, x, i)) continue;
                if (cache.dom[i].contains(sub(instance.f(i), instance.f(x)), tol)) {
                    blame(i, "efficient but not D(f(xbar))-minimal");
                    break;
                }
            }
        }
        // Nondomination implies minimality against the intersection set.
        if (row.nondominated && !row.theta_i_minimal) {
            blame(i, "nondominated but not Theta^i-minimal");
        }
        // Minimality against the union set implies nondomination.
        if (row.theta_u_minimal && !row.nondominated) {
            blame(i, "Theta^u-minimal but not nondominated");
        }
        // Conventional efficiency implies efficiency w.r.t. the
        // pointwise set D(f(xbar)) \ (-Theta^u).
        if (row.conventional_efficient) {
            for (std::size_t x = 0; x < n; ++x) {
                if (x == i || same_payoff(instance, x, i)) continue;
                Vec d = sub(instance.f(i), instance.f(x));
                bool in_dbar = cache.dom[i].contains(d, tol);
                bool in_minus_theta_u = theta.theta_u_contains(scale(-1.0, d), tol);
                if (in_dbar && !in_minus_theta_u) {
                    blame(i, "conventionally efficient but dominated in D(f(xbar)) \\ (-Theta^u)");
                    break;
                }
            }
        }
        // Under the pointedness condition, conventional implies strict.
        if (pointedness_holds_at(i)) {
            ++rep.pointedness_points;
            if (row.conventional_nondominated && !row.nondominated) {
                blame(i, "pointedness holds, conventionally nondominated but not nondominated");
            }
            if (row.conventional_efficient && !row.efficient) {
                blame(i, "pointedness holds, conventionally efficient but not efficient");
            }
        }
    }
    return rep;
}

}  // namespace domivar
