#include "domivar/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "domivar/analysis.hpp"

namespace domivar {

std::string variant_name(Variant v) {
    return v == Variant::EfficientFixedTheta ? "efficient" : "nondominated";
}

namespace {

struct Engine {
    const ProblemInstance& inst;
    Variant variant;
    std::vector<DomSet> dom;
    ScalarizationSpec spec;
    std::vector<double> psi_values;

    Engine(const ProblemInstance& i, Variant v)
        : inst(i), variant(v), dom(all_dom_sets(i)), spec{dom[i.x0].halfspaces(), i.k} {
        const Vec& y0 = inst.f(inst.x0);
        psi_values.resize(inst.ground.size());
        for (std::size_t x = 0; x < inst.ground.size(); ++x) {
            psi_values[x] = gerstewitz(spec, sub(inst.f(x), y0), inst.tol.tol_geo);
        }
    }

    bool member(std::size_t x, std::size_t u) const {
        Vec d = sub(sub(inst.f(x), inst.f(u)), scale(inst.xi() * inst.qdist(x, u), inst.k));
        const DomSet& set = variant == Variant::EfficientFixedTheta ? dom[inst.x0] : dom[u];
        return set.contains(d, inst.tol.tol_geo);
    }

    std::vector<std::size_t> worthwhile(std::size_t x) const {
        std::vector<std::size_t> out;
        for (std::size_t u = 0; u < inst.ground.size(); ++u) {
            if (member(x, u)) out.push_back(u);
        }
        return out;
    }
};

}  // namespace

std::vector<std::size_t> worthwhile_set(const ProblemInstance& instance, Variant variant,
                                        std::size_t x, const std::vector<DomSet>& dom) {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < instance.ground.size(); ++u) {
        Vec d = sub(sub(instance.f(x), instance.f(u)),
                    scale(instance.xi() * instance.qdist(x, u), instance.k));
        const DomSet& set = variant == Variant::EfficientFixedTheta ? dom[instance.x0] : dom[u];
        if (set.contains(d, instance.tol.tol_geo)) out.push_back(u);
    }
    return out;
}

std::vector<std::size_t> worthwhile_set(const ProblemInstance& instance, Variant variant,
                                        std::size_t x) {
    std::vector<DomSet> dom = all_dom_sets(instance);
    return worthwhile_set(instance, variant, x, dom);
}

namespace {

QuasiboundedProbe quasibounded_probe(const ProblemInstance& inst, const PolyhedralSet& theta) {
    QuasiboundedProbe probe;
    if (!inst.ground.is_grid()) {
        probe.details.push_back("finite labeled ground: range is finite, quasibounded with M = rge f");
        return probe;
    }
    probe.applicable = true;
    // For a polyhedral cone Theta, f quasibounded w.r.t. Theta means every
    // support inf_x <a_i, f(x)> is finite. Within a grid this is probed by
    // nested boxes around the center: a support minimum that keeps strictly
    // decreasing out to the boundary shell is evidence of unboundedness.
    const Vec& lo = inst.ground.grid_lower();
    const Vec& hi = inst.ground.grid_upper();
    Vec center(lo.size());
    Vec radius(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
        center[i] = 0.5 * (lo[i] + hi[i]);
        radius[i] = 0.5 * (hi[i] - lo[i]);
    }
    const std::vector<double> fractions = {0.25, 0.5, 0.75, 1.0};
    for (const Halfspace& h : theta.halfspaces) {
        std::vector<double> mins(fractions.size(), kPlusInf);
        for (std::size_t p = 0; p < inst.ground.size(); ++p) {
            const Vec& x = inst.ground.coord(p);
            double shell = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (radius[i] > 0.0) shell = std::max(shell, std::fabs(x[i] - center[i]) / radius[i]);
            }
            double v = dot(h.normal, inst.f(p));
            for (std::size_t s = 0; s < fractions.size(); ++s) {
                if (shell <= fractions[s] + 1e-12) mins[s] = std::min(mins[s], v);
            }
        }
        bool escaping = true;
        for (std::size_t s = 0; s + 1 < fractions.size(); ++s) {
            if (!(mins[s + 1] < mins[s] - 1e-6)) escaping = false;
        }
        std::ostringstream os;
        os << "support along " << vec_to_string(h.normal) << ": shell minima";
        for (double m : mins) os << " " << m;
        os << (escaping ? " (keeps decreasing to the boundary)" : " (stabilizes)");
        probe.details.push_back(os.str());
        if (escaping) probe.quasibounded = false;
    }
    return probe;
}

}  // namespace

AssumptionReport validate_assumptions(const ProblemInstance& instance, Variant variant) {
    Engine eng(instance, variant);
    AssumptionReport rep;

    std::vector<std::size_t> w0 = eng.worthwhile(instance.x0);
    double inf_psi = kPlusInf;
    bool any_finite = false;
    for (std::size_t u : w0) {
        double p = eng.psi_values[u];
        if (std::isfinite(p)) any_finite = true;
        inf_psi = std::min(inf_psi, p);
    }
    rep.inf_psi = inf_psi;
    if (inf_psi == kMinusInf) {
        rep.e1_pass = false;
        rep.e1_note = "psi unbounded below on W(x0)";
    } else if (!any_finite) {
        rep.e1_pass = false;
        rep.e1_note = "psi is +inf on all of W(x0): scalarizable region empty";
    } else {
        rep.e1_pass = true;
        rep.e1_note = "inf psi over W(x0) attained on the finite ground set";
    }

    if (eng.spec.theta.is_cone(instance.tol.tol_geo)) {
        rep.scalarization = check_scalarization_conditions(eng.spec, instance.tol.tol_geo);
    } else {
        rep.scalarization.notes.push_back("Theta = D(f(x0)) is not a cone: all clauses fail");
    }
    if (variant == Variant::NondominatedVariable) {
        rep.f3 = check_F3(instance.structure, instance, 500);
    }
    rep.hausdorff = forward_hausdorff_check(instance.quasimetric, instance.ground);
    rep.quasibounded = quasibounded_probe(instance, eng.spec.theta);
    rep.e2_note =
        "limiting monotonicity is not pre-validated; it is checked ex post on the Picard trace";
    return rep;
}

SolverResult solve(const ProblemInstance& instance, Variant variant, const SolverConfig& config) {
    Engine eng(instance, variant);
    SolverResult res;
    res.variant = variant;
    res.assumptions = validate_assumptions(instance, variant);

    if (res.assumptions.inf_psi == kMinusInf) {
        throw SolverAssumptionError("E1/F1 violated: psi unbounded below on W(x0)");
    }
    {
        bool any_finite = false;
        for (std::size_t u : eng.worthwhile(instance.x0)) {
            if (std::isfinite(eng.psi_values[u])) any_finite = true;
        }
        if (!any_finite) {
            throw SolverAssumptionError("E1/F1 violated: psi undefined (+inf) on all of W(x0)");
        }
    }

    std::size_t current = instance.x0;
    res.trace.push_back(current);
    res.psi_trace.push_back(eng.psi_values[current]);
    res.status = "max_iter";
    for (std::size_t n = 0; n < config.max_iter; ++n) {
        std::vector<std::size_t> w = eng.worthwhile(current);
        bool at_fixed_point = true;
        for (std::size_t u : w) {
            if (instance.qdist(current, u) > instance.tol.tol_eq) {
                at_fixed_point = false;
                break;
            }
        }
        if (at_fixed_point) {
            res.status = "fixed_point";
            break;
        }
        // Choice rule: psi-argmin of W(x_n), ties by smallest label. The
        // argmin attains the infimum, so it lies in the slack band
        // [inf, inf + 2^{-(n+1)}] automatically.
        std::size_t best = instance.ground.size();
        for (std::size_t u : w) {
            if (!std::isfinite(eng.psi_values[u])) continue;
            if (best == instance.ground.size() || eng.psi_values[u] < eng.psi_values[best] ||
                (eng.psi_values[u] == eng.psi_values[best] &&
                 instance.ground.label(u) < instance.ground.label(best))) {
                best = u;
            }
        }
        if (best == instance.ground.size()) {
            throw SolverAssumptionError(
                "scalarization domain exhausted: W(x_n) has no finite-psi member "
                "(assumption E1/E3 or F1/F3 failure)");
        }
        if (best == current) {
            // The choice map is deterministic and W(x_n) does not depend on n,
            // so a repeated iterate would repeat forever.
            res.status = "stalled";
            break;
        }
        res.step_qdist.push_back(instance.qdist(current, best));
        res.step_slack.push_back(config.slack(n));
        current = best;
        res.trace.push_back(current);
        res.psi_trace.push_back(eng.psi_values[current]);
    }

    res.x_star = current;
    res.x_star_label = instance.ground.label(current);
    res.certificates = verify_certificates(instance, variant, res);
    return res;
}

CertificateReport verify_certificates(const ProblemInstance& instance, Variant variant,
                                      const SolverResult& result) {
    Engine eng(instance, variant);
    CertificateReport rep;
    const std::size_t x0 = instance.x0;
    const std::size_t xs = result.x_star;
    const double xi = instance.xi();
    const double tol = instance.tol.tol_geo;

    // (i): the move x0 -> x* is worthwhile for the variant's set.
    rep.cert_i.vector = sub(sub(instance.f(x0), instance.f(xs)),
                            scale(xi * instance.qdist(x0, xs), instance.k));
    if (variant == Variant::EfficientFixedTheta) {
        rep.cert_i.set_name = "D(f(x0))";
        rep.cert_i.holds = eng.dom[x0].contains(rep.cert_i.vector, tol);
    } else {
        rep.cert_i.set_name = "D(f(x*))";
        rep.cert_i.holds = eng.dom[xs].contains(rep.cert_i.vector, tol);
    }

    // (ii): no move away from x* is worthwhile; exhaustive over the ground
    // set, "x != x*" taken as label identity.
    rep.cert_ii.holds = true;
    for (std::size_t x = 0; x < instance.ground.size(); ++x) {
        if (x == xs) continue;
        Vec d = sub(sub(instance.f(xs), instance.f(x)),
                    scale(xi * instance.qdist(xs, x), instance.k));
        const DomSet& set = variant == Variant::EfficientFixedTheta ? eng.dom[x0] : eng.dom[x];
        if (set.contains(d, tol)) {
            rep.cert_ii.holds = false;
            if (rep.cert_ii.witnesses.size() < 8) {
                rep.cert_ii.witnesses.push_back(instance.ground.label(x));
            }
        }
    }

    // (iii): localization, guaranteed only under the approximate-solution premise.
    rep.cert_iii.value = instance.qdist(x0, xs);
    rep.cert_iii.bound = xi;
    rep.cert_iii.holds = rep.cert_iii.value <= xi + instance.tol.tol_eq;
    rep.cert_iii.premise_holds = variant == Variant::EfficientFixedTheta
                                     ? epsilon_efficient(instance, x0, instance.epsilon, instance.k)
                                     : epsilon_nondominated(instance, x0, instance.epsilon, instance.k);
    rep.cert_iii.status = rep.cert_iii.holds ? "holds"
                          : rep.cert_iii.premise_holds ? "failed"
                                                       : "not_guaranteed";

    // (E5) upgrade for the efficient variant.
    if (variant == Variant::EfficientFixedTheta) {
        rep.cert_e5.applicable = true;
        SubsetResult inclusion = subset_cone(eng.dom[xs], eng.dom[x0], tol);
        rep.cert_e5.inclusion_holds = inclusion.subset;
        rep.cert_e5.inclusion_witness = inclusion.witness;
        if (inclusion.subset) {
            rep.cert_e5.strengthened_holds = true;
            for (std::size_t x = 0; x < instance.ground.size(); ++x) {
                if (x == xs) continue;
                Vec d = sub(sub(instance.f(xs), instance.f(x)),
                            scale(xi * instance.qdist(xs, x), instance.k));
                if (eng.dom[xs].contains(d, tol)) {
                    rep.cert_e5.strengthened_holds = false;
                    if (rep.cert_e5.witnesses.size() < 8) {
                        rep.cert_e5.witnesses.push_back(instance.ground.label(x));
                    }
                }
            }
        }
    }

    // (E2)/(F2) ex post: the terminal point stays worthwhile from every iterate.
    rep.e2_expost = true;
    for (std::size_t n = 0; n < result.trace.size(); ++n) {
        if (!eng.member(result.trace[n], xs)) {
            rep.e2_expost = false;
            if (rep.e2_witnesses.size() < 8) {
                rep.e2_witnesses.push_back("x* not in W(" +
                                           instance.ground.label(result.trace[n]) + ")");
            }
        }
    }
    return rep;
}

std::vector<std::size_t> brute_force_fixed_points(const ProblemInstance& instance, Variant variant) {
    if (instance.ground.size() > 10000) {
        throw std::invalid_argument("brute_force_fixed_points: ground set exceeds 10^4 points");
    }
    Engine eng(instance, variant);
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < instance.ground.size(); ++x) {
        bool fixed = true;
        for (std::size_t u = 0; u < instance.ground.size(); ++u) {
            if (eng.member(x, u) && instance.qdist(x, u) > instance.tol.tol_eq) {
                fixed = false;
                break;
            }
        }
        if (fixed) out.push_back(x);
    }
    return out;
}

}  // namespace domivar
