#pragma once

#include <optional>
#include <string>
#include <vector>

namespace domivar {

/// Point in the m-dimensional real payoff space. All entries must be finite.
using Vec = std::vector<double>;

// --- small dense vector helpers -------------------------------------------

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(double t, const Vec& a);
double dot(const Vec& a, const Vec& b);
double max_norm(const Vec& a);
double p_norm(const Vec& a, double p);  // p >= 1, p = inf allowed
bool all_finite(const Vec& a);
bool is_zero(const Vec& a, double tol);
std::string vec_to_string(const Vec& a);

/// Default tolerances. Halfspace slacks and LP feasibility both run at 1e-9;
/// the bundled instances are small rational problems where this is loose.
constexpr double kTolGeo = 1e-9;
constexpr double kTolLp = 1e-9;
constexpr double kTolEq = 1e-9;

/// One closed halfspace { d : <normal, d> >= offset }. The sense is fixed to >=.
struct Halfspace {
    Vec normal;  // nonzero
    double offset = 0.0;
};

/// Intersection of finitely many halfspaces. A cone iff every offset is 0.
/// The degenerate cone {0} is representable as {y >= 0, -y >= 0} per coordinate.
struct PolyhedralSet {
    std::vector<Halfspace> halfspaces;

    bool is_cone(double tol = kTolGeo) const;
    std::size_t dim() const { return halfspaces.empty() ? 0 : halfspaces[0].normal.size(); }
};

/// Conic hull of finitely many nonzero generators: all nonnegative combinations.
struct GeneratorCone {
    std::vector<Vec> generators;

    std::size_t dim() const { return generators.empty() ? 0 : generators[0].size(); }
};

/// Membership with slack tolerance: every halfspace satisfied up to -tol.
bool contains(const PolyhedralSet& set, const Vec& d, double tol = kTolGeo);

/// Membership in a generator cone, decided by phase-1 linear feasibility.
bool cone_contains(const GeneratorCone& gens, const Vec& d, double tol = kTolLp);

/// Exact 2-D conversion from generator to halfspace form.
/// Accepts pointed cones, rays, lines and halfplanes; throws if the generated
/// cone is all of R^2 (no halfspace representation with the fixed sense).
PolyhedralSet generators_to_halfspaces_2d(const GeneratorCone& gens);

/// Extreme-direction generators of a 2-D polyhedral cone in halfspace form.
/// Returns an empty list for the degenerate cone {0}.
std::vector<Vec> halfspace_cone_rays_2d(const PolyhedralSet& cone, double tol = kTolGeo);

/// Pointedness test of Prop-style pairs: true iff A cap (-B) = {0}.
/// Decided by searching a nonzero witness direction via normalized LPs.
/// Both arguments must be cones.
struct PointednessResult {
    bool pointed = false;
    std::optional<Vec> witness;  // nonzero d with d in A and -d in B
};
PointednessResult pointedness_pair(const PolyhedralSet& a, const PolyhedralSet& b,
                                   double tol = kTolLp);

// --- phase-1 simplex for small dense systems -------------------------------

enum class Rel { Le, Ge, Eq };

struct LinearConstraint {
    Vec coeffs;
    Rel rel = Rel::Ge;
    double rhs = 0.0;
};

enum class LpStatus { Feasible, Infeasible, NumericalError };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Vec witness;  // valid iff status == Feasible
    std::string error;
};

/// Finds a feasible point of a system of linear constraints over free
/// variables, or reports infeasibility. Pivoting uses Bland's rule, so the
/// result (including the witness) is deterministic. An unbounded auxiliary
/// objective cannot occur for a well-formed phase-1 tableau; if the pivot
/// search still fails, the status is NumericalError, never silence.
LpResult lp_feasible(const std::vector<LinearConstraint>& constraints, std::size_t num_vars,
                     double tol = kTolLp);

}  // namespace domivar
