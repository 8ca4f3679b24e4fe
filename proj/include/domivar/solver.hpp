#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "domivar/domination.hpp"
#include "domivar/instance.hpp"
#include "domivar/quasimetric.hpp"
#include "domivar/scalarization.hpp"

namespace domivar {

/// Which principle drives the iteration. Both use the same perturbed gain
/// f(x) - f(u) - sqrt(eps) q(x,u) k; they differ in the membership set:
/// the fixed Theta = D(f(x0)) for efficient solutions, the candidate's own
/// D(f(u)) for nondominated solutions.
enum class Variant { EfficientFixedTheta, NondominatedVariable };

std::string variant_name(Variant v);

/// Raised when the iteration cannot run as the theorems require: psi unbounded
/// below or undefined on W(x0), or every candidate falls outside the
/// scalarizable region. CLI maps this to exit code 2.
class SolverAssumptionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct SolverConfig {
    std::size_t max_iter = 10000;
    // Slack schedule of the choice rule: s_n = 2^{-(n+1)}. On finite grounds
    // the argmin attains the infimum, so the schedule only enters the recorded
    // step-bound diagnostics, never the selection.
    double slack(std::size_t n) const { return std::ldexp(1.0, -static_cast<int>(n) - 1); }
};

struct CertificateI {
    bool holds = false;
    Vec vector;            // f(x0) - f(x*) - sqrt(eps) q(x0,x*) k
    std::string set_name;  // which domination set was tested
};

struct CertificateII {
    bool holds = false;
    std::vector<std::string> witnesses;  // points x where the exclusion fails
};

/// Conclusion (iii) carries a premise: it is guaranteed only when x0 is an
/// approximate solution in the matching sense. When the premise is absent a
/// failed bound is reported as "not_guaranteed", never as "failed".
struct CertificateIII {
    double value = 0.0;  // q(x0, x*)
    double bound = 0.0;  // sqrt(eps)
    bool holds = false;
    bool premise_holds = false;
    std::string status;  // "holds" | "failed" | "not_guaranteed"
};

/// Domination-inclusion upgrade of the efficient principle: when
/// D(f(x*)) is contained in D(f(x0)), conclusion (ii) strengthens to
/// exclusion from D(f(x*)) itself.
struct CertificateE5 {
    bool applicable = false;  // efficient variant only
    bool inclusion_holds = false;
    std::optional<Vec> inclusion_witness;
    bool strengthened_holds = false;
    std::vector<std::string> witnesses;
};

struct QuasiboundedProbe {
    bool applicable = false;  // grid grounds only
    bool quasibounded = true;
    std::vector<std::string> details;
};

struct AssumptionReport {
    bool e1_pass = false;
    double inf_psi = 0.0;  // over W(x0); may be -inf
    std::string e1_note;
    ScalarizationConditions scalarization;  // (E3) / (F3-a)
    std::optional<F3Report> f3;             // nondominated variant
    HausdorffReport hausdorff;              // (E4) / (F4)
    QuasiboundedProbe quasibounded;         // diagnostic, non-gating
    std::string e2_note;
};

struct CertificateReport {
    CertificateI cert_i;
    CertificateII cert_ii;
    CertificateIII cert_iii;
    CertificateE5 cert_e5;
    bool e2_expost = false;  // x* in W(x_n) for every recorded n
    std::vector<std::string> e2_witnesses;
};

struct SolverResult {
    Variant variant = Variant::EfficientFixedTheta;
    std::size_t x_star = 0;
    std::string x_star_label;
    std::vector<std::size_t> trace;   // x_0 .. x_N (x_N = x_star)
    std::vector<double> psi_trace;    // psi at each iterate
    std::vector<double> step_qdist;   // q(x_n, x_{n+1})
    std::vector<double> step_slack;   // s_n per executed step
    std::string status;               // "fixed_point" | "stalled" | "max_iter"
    CertificateReport certificates;
    AssumptionReport assumptions;
};

/// W(x): candidates whose perturbed payoff gain lies in the variant's
/// domination set. Indices come back sorted. `dom` must be all_dom_sets(inst).
std::vector<std::size_t> worthwhile_set(const ProblemInstance& instance, Variant variant,
                                        std::size_t x, const std::vector<DomSet>& dom);
std::vector<std::size_t> worthwhile_set(const ProblemInstance& instance, Variant variant,
                                        std::size_t x);

/// Generalized Picard iteration with the 2^{-(n+1)} slack schedule: from x0,
/// repeatedly move to the (psi, label)-smallest member of W(x_n), stopping
/// once W(x_n) only contains points at quasidistance <= tol_eq. Certificates
/// and the assumption report are always filled, also on stalls.
SolverResult solve(const ProblemInstance& instance, Variant variant, const SolverConfig& config);

/// Re-derives all certificates of `result` from scratch, exhaustively over the
/// ground set. solve() itself uses this to fill its certificate block.
CertificateReport verify_certificates(const ProblemInstance& instance, Variant variant,
                                      const SolverResult& result);

/// Pre-iteration validation: inf psi over W(x0) for (E1)/(F1), scalarization
/// clauses for (E3)/(F3-a), check_F3 for the nondominated variant,
/// forward-Hausdorff for (E4)/(F4), plus the quasiboundedness diagnostic.
/// (E2)/(F2) are not pre-validated; they are checked ex post on the trace.
AssumptionReport validate_assumptions(const ProblemInstance& instance, Variant variant);

/// Independent oracle: every x whose W(x) only contains points at
/// quasidistance <= tol_eq. Ground sets above 10^4 points are refused.
std::vector<std::size_t> brute_force_fixed_points(const ProblemInstance& instance, Variant variant);

}  // namespace domivar
