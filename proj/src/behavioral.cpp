#include "domivar/behavioral.hpp"

namespace domivar {

std::string trap_kind_name(TrapKind k) { return k == TrapKind::ExAnte ? "ex-ante" : "ex-post"; }

MoveEvaluation evaluate_move(const ProblemInstance& instance, std::size_t x, std::size_t u) {
    MoveEvaluation ev;
    ev.from = instance.ground.label(x);
    ev.to = instance.ground.label(u);
    ev.advantage = sub(instance.f(x), instance.f(u));
    // Costs to move are C(x,u) = q(x,u) k with C(x,x) = 0, so the
    // inconvenience specializes to sqrt(eps) q(x,u) k.
    ev.inconvenience = scale(instance.xi() * instance.qdist(x, u), instance.k);
    ev.balance = sub(ev.advantage, ev.inconvenience);
    ev.ex_ante_worthwhile = instance.dom_at(x).contains(ev.balance, instance.tol.tol_geo);
    ev.ex_post_worthwhile = instance.dom_at(u).contains(ev.balance, instance.tol.tol_geo);
    return ev;
}

namespace {

/// Both trap conditions, shared by find_trap and verify_trap. Ex ante reads
/// every balance against D(f(x0)); ex post reads the reach balance against
/// D(f(x*)) and each leave balance against the leave target's D(f(x)).
void evaluate_trap_conditions(const ProblemInstance& inst, TrapKind kind, std::size_t x0,
                              std::size_t xs, TrapCertificate& cert) {
    std::vector<DomSet> dom = all_dom_sets(inst);
    const double tol = inst.tol.tol_geo;
    const double xi = inst.xi();

    Vec reach = sub(sub(inst.f(x0), inst.f(xs)), scale(xi * inst.qdist(x0, xs), inst.k));
    const DomSet& reach_set = kind == TrapKind::ExAnte ? dom[x0] : dom[xs];
    cert.condition_i = reach_set.contains(reach, tol);

    cert.condition_ii = true;
    cert.condition_ii_witnesses.clear();
    for (std::size_t x = 0; x < inst.ground.size(); ++x) {
        if (x == xs) continue;
        Vec leave = sub(sub(inst.f(xs), inst.f(x)), scale(xi * inst.qdist(xs, x), inst.k));
        const DomSet& leave_set = kind == TrapKind::ExAnte ? dom[x0] : dom[x];
        if (leave_set.contains(leave, tol)) {
            cert.condition_ii = false;
            if (cert.condition_ii_witnesses.size() < 8) {
                cert.condition_ii_witnesses.push_back(inst.ground.label(x));
            }
        }
    }
}

}  // namespace

TrapCertificate find_trap(const ProblemInstance& instance, TrapKind kind) {
    SolverConfig config;
    config.max_iter = instance.tol.max_iter;
    Variant variant =
        kind == TrapKind::ExAnte ? Variant::EfficientFixedTheta : Variant::NondominatedVariable;

    TrapCertificate cert;
    cert.kind = kind;
    cert.solver = solve(instance, variant, config);
    cert.x0 = instance.ground.label(instance.x0);
    cert.x_star = cert.solver.x_star_label;
    evaluate_trap_conditions(instance, kind, instance.x0, cert.solver.x_star, cert);
    return cert;
}

bool verify_trap(const ProblemInstance& instance, const TrapCertificate& cert) {
    std::size_t x0 = instance.ground.index_of(cert.x0);
    std::size_t xs = instance.ground.index_of(cert.x_star);
    TrapCertificate fresh;
    evaluate_trap_conditions(instance, cert.kind, x0, xs, fresh);
    return fresh.condition_i && fresh.condition_ii;
}

}  // namespace domivar
