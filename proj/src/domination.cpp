#include "domivar/domination.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "domivar/instance.hpp"
#include "domivar/scalarization.hpp"

namespace domivar {

bool DomSet::contains(const Vec& d, double tol) const {
    if (half) return domivar::contains(*half, d, tol);
    if (gens) return cone_contains(*gens, d, tol);
    throw std::logic_error("DomSet has no representation");
}

bool DomSet::is_cone(double tol) const {
    if (half) return half->is_cone(tol);
    return gens.has_value();  // generator cones are cones by construction
}

std::vector<Vec> DomSet::generator_list(double tol) const {
    if (gens) return gens->generators;
    if (half && half->dim() == 2 && half->is_cone(tol)) return halfspace_cone_rays_2d(*half, tol);
    throw std::invalid_argument(
        "generator form unavailable: supply generators for halfspace sets in dimension >= 3");
}

const PolyhedralSet& DomSet::halfspaces() const {
    if (!half) {
        throw std::invalid_argument(
            "halfspace form unavailable: supply halfspaces for generator cones in dimension >= 3");
    }
    return *half;
}

std::string dom_key(const DomSet& set) {
    std::string key;
    auto put = [&key](double v) {
        key.append(reinterpret_cast<const char*>(&v), sizeof v);
    };
    if (set.half) {
        key += 'h';
        for (const Halfspace& h : set.half->halfspaces) {
            for (double v : h.normal) put(v);
            put(h.offset);
        }
    }
    if (set.gens) {
        key += 'g';
        for (const Vec& g : set.gens->generators) {
            for (double v : g) put(v);
        }
    }
    return key;
}

SubsetResult subset_cone(const DomSet& a, const DomSet& b, double tol) {
    if (a.gens || (a.half && a.half->dim() == 2 && a.half->is_cone(tol))) {
        for (const Vec& g : a.generator_list(tol)) {
            if (!b.contains(g, tol)) return {false, g};
        }
        return {true, std::nullopt};
    }
    // Halfspace-only A in higher dimension: search a witness direction of A
    // violating one halfspace of B.
    if (!a.half || !b.half) {
        throw std::invalid_argument("subset_cone: need generators of A or halfspaces of both sides");
    }
    const std::size_t m = a.half->dim();
    for (const Halfspace& hb : b.half->halfspaces) {
        std::vector<LinearConstraint> cons;
        for (const Halfspace& ha : a.half->halfspaces) cons.push_back({ha.normal, Rel::Ge, 0.0});
        cons.push_back({hb.normal, Rel::Eq, -1.0});
        LpResult r = lp_feasible(cons, m, tol);
        if (r.status == LpStatus::NumericalError) {
            throw std::runtime_error("subset_cone: LP failed: " + r.error);
        }
        if (r.status == LpStatus::Feasible) return {false, r.witness};
    }
    return {true, std::nullopt};
}

DominationStructure::DominationStructure(std::vector<DominationRule> rules,
                                         SetTemplate default_template, std::size_t dim)
    : rules_(std::move(rules)), default_(std::move(default_template)), dim_(dim) {
    if (dim_ == 0) throw std::invalid_argument("domination structure: dimension must be positive");
    auto check = [&](const SetTemplate& t, const char* where) {
        if (t.is_generators()) {
            for (const auto& g : t.generator_exprs) {
                if (g.size() != dim_) {
                    throw std::invalid_argument(std::string("domination structure: ") + where +
                                                ": generator arity != dimension");
                }
            }
            if (t.generator_exprs.empty()) {
                throw std::invalid_argument(std::string("domination structure: ") + where +
                                            ": empty generator list");
            }
        } else {
            if (t.halfspaces.empty()) {
                throw std::invalid_argument(std::string("domination structure: ") + where +
                                            ": template needs halfspaces or generators");
            }
            for (const auto& h : t.halfspaces) {
                if (h.normal.size() != dim_ || is_zero(h.normal, kTolGeo)) {
                    throw std::invalid_argument(std::string("domination structure: ") + where +
                                                ": bad halfspace normal");
                }
            }
        }
    };
    for (std::size_t i = 0; i < rules_.size(); ++i) check(rules_[i].set, "rule");
    check(default_, "default");
}

DomSet DominationStructure::evaluate(const Vec& y) const {
    if (y.size() != dim_) throw std::invalid_argument("domination evaluate: dimension mismatch");
    if (!all_finite(y)) throw std::invalid_argument("domination evaluate: non-finite payoff");
    const SetTemplate* tpl = &default_;
    for (const DominationRule& r : rules_) {
        if (r.when.eval(y)) {
            tpl = &r.set;
            break;
        }
    }
    DomSet out;
    if (tpl->is_generators()) {
        GeneratorCone cone;
        for (const auto& gexpr : tpl->generator_exprs) {
            Vec g(dim_);
            for (std::size_t i = 0; i < dim_; ++i) g[i] = gexpr[i].eval(y);
            if (is_zero(g, kTolGeo)) {
                throw std::domain_error("domination evaluate: generator vanishes at " +
                                        vec_to_string(y));
            }
            cone.generators.push_back(std::move(g));
        }
        if (dim_ == 2) out.half = generators_to_halfspaces_2d(cone);
        out.gens = std::move(cone);
    } else {
        out.half = PolyhedralSet{tpl->halfspaces};
    }
    return out;
}

bool leq_N(const DominationStructure& structure, const Vec& v, const Vec& y, double tol) {
    return structure.evaluate(v).contains(sub(y, v), tol);
}

bool leq_E(const DominationStructure& structure, const Vec& v, const Vec& y, double tol) {
    return structure.evaluate(y).contains(sub(y, v), tol);
}

F3Report check_F3(const DominationStructure& structure, const ProblemInstance& instance,
                  std::size_t sample_budget, std::uint64_t seed) {
    F3Report rep;
    const double tol = instance.tol.tol_geo;
    const std::size_t n = instance.ground.size();
    std::vector<DomSet> dom;
    dom.reserve(n);
    for (std::size_t i = 0; i < n; ++i) dom.push_back(structure.evaluate(instance.f(i)));
    const DomSet& theta = dom[instance.x0];

    // (F3-a): scalarization clauses on Theta = D(f(x0)).
    if (theta.is_cone(tol)) {
        ScalarizationConditions sc =
            check_scalarization_conditions({theta.halfspaces(), instance.k}, tol);
        rep.a_pass = sc.all();
        rep.a_details.push_back(std::string("0 in Theta: ") + (sc.zero_in_theta ? "yes" : "no"));
        rep.a_details.push_back(std::string("Theta+Theta in Theta: ") +
                                (sc.theta_plus_theta ? "yes" : "no"));
        rep.a_details.push_back(std::string("Theta+cone(k) in Theta: ") +
                                (sc.theta_plus_cone_k ? "yes" : "no"));
        rep.a_details.push_back(std::string("Theta cap -cone(k) = {0}: ") +
                                (sc.pointed_along_k ? "yes" : "no"));
    } else {
        rep.a_pass = false;
        rep.a_details.push_back("Theta = D(f(x0)) is not a cone");
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    auto sample_point = [&](std::size_t i) {
        return n <= sample_budget ? i % n : pick(rng);
    };
    const std::size_t points = std::min(n, sample_budget);

    // (F3-b): k is a recession direction of every sampled D(f(x)).
    rep.b_pass = true;
    for (std::size_t it = 0; it < points; ++it) {
        std::size_t x = sample_point(it);
        ++rep.b_tested;
        if (!dom[x].contains(instance.k, tol)) {
            rep.b_pass = false;
            if (rep.b_witnesses.size() < 4) {
                rep.b_witnesses.push_back("k not in D(f(" + instance.ground.label(x) + "))");
            }
        }
    }

    // (F3-c): on pairs with f(u) - f(w) in D(f(w)), adding D(f(u)) must not
    // leave D(f(w)); for convex cones this is the generator-wise inclusion
    // D(f(u)) in D(f(w)).
    rep.c_pass = true;
    for (std::size_t it = 0; it < sample_budget; ++it) {
        std::size_t w = pick(rng), u = pick(rng);
        if (!dom[w].contains(sub(instance.f(u), instance.f(w)), tol)) continue;
        ++rep.c_tested;
        SubsetResult sr = subset_cone(dom[u], dom[w], tol);
        if (!sr.subset) {
            rep.c_pass = false;
            if (rep.c_witnesses.size() < 4) {
                std::ostringstream os;
                os << "pair (" << instance.ground.label(w) << "," << instance.ground.label(u)
                   << "): generator " << vec_to_string(*sr.witness) << " of D(f(u)) not in D(f(w))";
                rep.c_witnesses.push_back(os.str());
            }
        }
    }

    // (F3-d): every sampled D(f(x)) sits inside Theta.
    rep.d_pass = true;
    for (std::size_t it = 0; it < points; ++it) {
        std::size_t x = sample_point(it);
        ++rep.d_tested;
        SubsetResult sr = subset_cone(dom[x], theta, tol);
        if (!sr.subset) {
            rep.d_pass = false;
            if (rep.d_witnesses.size() < 4) {
                std::ostringstream os;
                os << "generator " << vec_to_string(*sr.witness) << " of D(f("
                   << instance.ground.label(x) << ")) not in Theta";
                rep.d_witnesses.push_back(os.str());
            }
        }
    }
    return rep;
}

}  // namespace domivar
