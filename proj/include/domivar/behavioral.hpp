#pragma once

#include <string>
#include <vector>

#include "domivar/instance.hpp"
#include "domivar/solver.hpp"

namespace domivar {

/// One move (x, u) in the decision space, scored in the payoff space:
/// advantage A = f(x) - f(u), inconvenience I = sqrt(eps) q(x,u) k, and the
/// worthwhile balance B = A - I. Ex ante judges B from the start's domination
/// set, ex post from the destination's.
struct MoveEvaluation {
    std::string from, to;
    Vec advantage;
    Vec inconvenience;
    Vec balance;
    bool ex_ante_worthwhile = false;
    bool ex_post_worthwhile = false;
};

MoveEvaluation evaluate_move(const ProblemInstance& instance, std::size_t x, std::size_t u);

enum class TrapKind { ExAnte, ExPost };

std::string trap_kind_name(TrapKind k);

/// A position worthwhile to reach from x0 but not worthwhile to leave.
/// Condition (i) is the reach membership, condition (ii) the universal
/// non-membership of every move away. Ex ante judges both from D(f(x0));
/// ex post judges (i) from D(f(x*)) and (ii) from D(f(x)) per candidate x.
struct TrapCertificate {
    TrapKind kind = TrapKind::ExAnte;
    std::string x0, x_star;
    bool condition_i = false;
    bool condition_ii = false;
    std::vector<std::string> condition_ii_witnesses;
    SolverResult solver;  // the constructive path to the trap

    bool valid() const { return condition_i && condition_ii; }
};

/// Runs the matching Picard solver (efficient for ex ante, nondominated for
/// ex post) and certifies the terminal point as a trap.
TrapCertificate find_trap(const ProblemInstance& instance, TrapKind kind);

/// Re-evaluates both trap conditions from scratch, without reusing any solver
/// state. False as soon as either condition fails on the certified points.
bool verify_trap(const ProblemInstance& instance, const TrapCertificate& cert);

}  // namespace domivar
