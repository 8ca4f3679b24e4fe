#include "domivar/scalarization.hpp"

#include <cmath>
#include <stdexcept>

#include "domivar/instance.hpp"

namespace domivar {

double gerstewitz(const ScalarizationSpec& spec, const Vec& y, double tol) {
    if (is_zero(spec.k, tol)) throw std::invalid_argument("gerstewitz: k must be nonzero");
    double lower = kMinusInf;
    double upper = kPlusInf;
    for (const Halfspace& h : spec.theta.halfspaces) {
        const double ak = dot(h.normal, spec.k);
        const double rhs = dot(h.normal, y) + h.offset;
        if (ak > tol) {
            lower = std::max(lower, rhs / ak);
        } else if (ak < -tol) {
            upper = std::min(upper, rhs / ak);
        } else if (rhs > tol) {
            return kPlusInf;  // constraint independent of t and violated
        }
    }
    if (upper < lower - tol) return kPlusInf;  // empty feasible t-set
    if (lower == kMinusInf) return kMinusInf;  // feasible for arbitrarily negative t
    return lower;
}

OracleValue gerstewitz_oracle(const ScalarizationSpec& spec, const Vec& y, double tol,
                              double bracket) {
    auto member = [&](double t) {
        return contains(spec.theta, sub(scale(t, spec.k), y));
    };
    if (!member(bracket)) return {kPlusInf, true};
    if (member(-bracket)) return {kMinusInf, true};
    double lo = -bracket, hi = bracket;  // lo outside, hi inside
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (member(mid)) hi = mid;
        else lo = mid;
    }
    return {hi, false};
}

double psi(const ProblemInstance& instance, std::size_t x) {
    DomSet theta = instance.dom_at(instance.x0);
    ScalarizationSpec spec{theta.halfspaces(), instance.k};
    return gerstewitz(spec, sub(instance.f(x), instance.f(instance.x0)), instance.tol.tol_geo);
}

ScalarizationConditions check_scalarization_conditions(const ScalarizationSpec& spec, double tol) {
    if (!spec.theta.is_cone(tol)) {
        throw std::invalid_argument("check_scalarization_conditions: theta must be a cone");
    }
    if (is_zero(spec.k, tol)) {
        throw std::invalid_argument("check_scalarization_conditions: k must be nonzero");
    }
    ScalarizationConditions rep;
    Vec zero(spec.k.size(), 0.0);
    rep.zero_in_theta = contains(spec.theta, zero, tol);
    rep.theta_plus_theta = true;
    rep.notes.push_back("Theta + Theta in Theta: halfspace cones are convex, holds by construction");
    rep.theta_plus_cone_k = contains(spec.theta, spec.k, tol);
    rep.pointed_along_k = !contains(spec.theta, scale(-1.0, spec.k), tol);
    rep.k_vectorially_closed = true;
    rep.notes.push_back("k-vectorial closedness: closed polyhedral sets satisfy vcl_k A = A");
    if (!rep.theta_plus_cone_k) rep.notes.push_back("k is not in Theta");
    if (!rep.pointed_along_k) rep.notes.push_back("-k lies in Theta");
    return rep;
}

}  // namespace domivar
