#pragma once

#include <limits>
#include <string>
#include <vector>

#include "domivar/geometry.hpp"

namespace domivar {

struct ProblemInstance;

constexpr double kPlusInf = std::numeric_limits<double>::infinity();
constexpr double kMinusInf = -std::numeric_limits<double>::infinity();

/// Gerstewitz scalarization data: the set A (typically a cone Theta) in
/// halfspace form and a nonzero direction k.
struct ScalarizationSpec {
    PolyhedralSet theta;
    Vec k;
};

/// phi_{A,k}(y) = inf { t : y in t*k - A }, with inf of the empty set = +inf.
/// Closed form over halfspaces { <a_i, d> >= b_i }: each i imposes
/// t * <a_i,k> >= <a_i,y> + b_i; indices with positive <a_i,k> give lower
/// bounds, negative ones upper bounds, zero ones feasibility cuts. Returns
/// -inf when the feasible t-set is unbounded below.
double gerstewitz(const ScalarizationSpec& spec, const Vec& y, double tol = kTolGeo);

/// Independent check: bisection on t over the membership y in t*k - A.
struct OracleValue {
    double value = 0.0;
    bool bracket_exhausted = false;  // hit the [-T, T] bracket edge
};
OracleValue gerstewitz_oracle(const ScalarizationSpec& spec, const Vec& y, double tol,
                              double bracket = 1e6);

/// psi(x) = phi_{Theta,k}(f(x) - f(x0)) with Theta = D(f(x0)).
double psi(const ProblemInstance& instance, std::size_t x);

/// Clause-by-clause report for the scalarization conditions on a cone Theta:
/// 0 in Theta; Theta + Theta in Theta (automatic for halfspace cones);
/// Theta + cone(k) in Theta (iff k in Theta); Theta cap (-cone(k)) = {0}
/// (iff -k not in Theta); k-vectorial closedness (holds for closed polyhedra).
struct ScalarizationConditions {
    bool zero_in_theta = false;
    bool theta_plus_theta = false;
    bool theta_plus_cone_k = false;
    bool pointed_along_k = false;
    bool k_vectorially_closed = false;
    std::vector<std::string> notes;

    bool all() const {
        return zero_in_theta && theta_plus_theta && theta_plus_cone_k && pointed_along_k &&
               k_vectorially_closed;
    }
};
ScalarizationConditions check_scalarization_conditions(const ScalarizationSpec& spec,
                                                       double tol = kTolGeo);

}  // namespace domivar
