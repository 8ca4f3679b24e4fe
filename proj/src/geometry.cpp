#include "domivar/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace domivar {

namespace {

void require_same_dim(const Vec& a, const Vec& b, const char* where) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                    std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                                    ")");
    }
}

}  // namespace

Vec add(const Vec& a, const Vec& b) {
    require_same_dim(a, b, "add");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    require_same_dim(a, b, "sub");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(double t, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
    return r;
}

double dot(const Vec& a, const Vec& b) {
    require_same_dim(a, b, "dot");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double max_norm(const Vec& a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::fabs(v));
    return m;
}

double p_norm(const Vec& a, double p) {
    if (std::isinf(p)) return max_norm(a);
    if (p < 1.0) throw std::invalid_argument("p_norm: p must be >= 1");
    double s = 0.0;
    for (double v : a) s += std::pow(std::fabs(v), p);
    return std::pow(s, 1.0 / p);
}

bool all_finite(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](double v) { return std::isfinite(v); });
}

bool is_zero(const Vec& a, double tol) { return max_norm(a) <= tol; }

std::string vec_to_string(const Vec& a) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ", ";
        os << a[i];
    }
    os << ")";
    return os.str();
}

bool PolyhedralSet::is_cone(double tol) const {
    return std::all_of(halfspaces.begin(), halfspaces.end(),
                       [tol](const Halfspace& h) { return std::fabs(h.offset) <= tol; });
}

bool contains(const PolyhedralSet& set, const Vec& d, double tol) {
    for (const Halfspace& h : set.halfspaces) {
        require_same_dim(h.normal, d, "contains");
        if (dot(h.normal, d) - h.offset < -tol) return false;
    }
    return true;
}

bool cone_contains(const GeneratorCone& gens, const Vec& d, double tol) {
    if (gens.generators.empty()) return is_zero(d, tol);
    require_same_dim(gens.generators[0], d, "cone_contains");
    const std::size_t n = gens.generators.size();
    const std::size_t m = d.size();
    // lambda >= 0 with sum lambda_j g_j = d
    std::vector<LinearConstraint> cons;
    cons.reserve(m + n);
    for (std::size_t i = 0; i < m; ++i) {
        LinearConstraint c;
        c.coeffs.resize(n);
        for (std::size_t j = 0; j < n; ++j) c.coeffs[j] = gens.generators[j][i];
        c.rel = Rel::Eq;
        c.rhs = d[i];
        cons.push_back(std::move(c));
    }
    for (std::size_t j = 0; j < n; ++j) {
        LinearConstraint c;
        c.coeffs.assign(n, 0.0);
        c.coeffs[j] = 1.0;
        c.rel = Rel::Ge;
        c.rhs = 0.0;
        cons.push_back(std::move(c));
    }
    LpResult r = lp_feasible(cons, n, tol);
    if (r.status == LpStatus::NumericalError) {
        throw std::runtime_error("cone_contains: LP failed: " + r.error);
    }
    return r.status == LpStatus::Feasible;
}

namespace {

Vec normalize(const Vec& v) {
    double n = std::sqrt(dot(v, v));
    return scale(1.0 / n, v);
}

double cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace

PolyhedralSet generators_to_halfspaces_2d(const GeneratorCone& gens) {
    if (gens.dim() != 2) throw std::invalid_argument("generators_to_halfspaces_2d: dimension != 2");
    constexpr double kAngTol = 1e-12;
    // Distinct directions on the unit circle.
    std::vector<Vec> dirs;
    for (const Vec& g : gens.generators) {
        if (g.size() != 2) throw std::invalid_argument("generators_to_halfspaces_2d: ragged input");
        if (is_zero(g, kTolGeo)) throw std::invalid_argument("generators_to_halfspaces_2d: zero generator");
        Vec u = normalize(g);
        bool dup = std::any_of(dirs.begin(), dirs.end(), [&](const Vec& d) {
            return std::fabs(d[0] - u[0]) <= kAngTol && std::fabs(d[1] - u[1]) <= kAngTol;
        });
        if (!dup) dirs.push_back(u);
    }
    auto halfspace_left_of = [](const Vec& r) {
        // { d : cross(r, d) >= 0 }
        return Halfspace{{-r[1], r[0]}, 0.0};
    };
    auto halfspace_right_of = [](const Vec& r) {
        // { d : cross(d, r) >= 0 }
        return Halfspace{{r[1], -r[0]}, 0.0};
    };
    if (dirs.size() == 1) {
        const Vec& r = dirs[0];
        // The single ray: both cross-sign halfspaces plus the forward halfplane.
        return PolyhedralSet{{halfspace_left_of(r), halfspace_right_of(r), Halfspace{r, 0.0}}};
    }
    // Sort directions by angle and find the largest cyclic gap.
    std::vector<double> ang(dirs.size());
    std::vector<std::size_t> order(dirs.size());
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        ang[i] = std::atan2(dirs[i][1], dirs[i][0]);
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return ang[i] < ang[j]; });
    const double two_pi = 2.0 * std::acos(-1.0);
    double best_gap = -1.0;
    std::size_t gap_at = 0;  // gap between order[gap_at] and order[gap_at+1 mod n]
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::size_t j = (i + 1) % order.size();
        double g = ang[order[j]] - ang[order[i]];
        if (j == 0) g += two_pi;
        if (g > best_gap) {
            best_gap = g;
            gap_at = i;
        }
    }
    const double pi = std::acos(-1.0);
    if (best_gap < pi - 1e-9) {
        throw std::invalid_argument(
            "generators_to_halfspaces_2d: generators span all of R^2; no >=-halfspace form exists");
    }
    // The occupied arc runs counterclockwise from r_lo to r_hi.
    const Vec& r_hi = dirs[order[gap_at]];
    const Vec& r_lo = dirs[order[(gap_at + 1) % order.size()]];
    if (best_gap <= pi + 1e-9) {
        // Arc of exactly pi: the generated cone is a halfplane or (if nothing
        // sits strictly inside the arc) the boundary line itself.
        bool interior = false;
        for (const Vec& d : dirs) {
            if (cross2(r_lo, d) > kAngTol && cross2(d, r_hi) > kAngTol) interior = true;
        }
        if (interior) return PolyhedralSet{{halfspace_left_of(r_lo)}};
        return PolyhedralSet{{halfspace_left_of(r_lo), halfspace_right_of(r_lo)}};
    }
    if (cross2(r_lo, r_hi) <= kAngTol && dot(r_lo, r_hi) < 0.0) {
        // Opposite rays with nothing in between: a line.
        return PolyhedralSet{{halfspace_left_of(r_lo), halfspace_right_of(r_lo)}};
    }
    // Pointed cone spanning an arc < pi.
    return PolyhedralSet{{halfspace_left_of(r_lo), halfspace_right_of(r_hi)}};
}

std::vector<Vec> halfspace_cone_rays_2d(const PolyhedralSet& cone, double tol) {
    if (cone.dim() != 2) throw std::invalid_argument("halfspace_cone_rays_2d: dimension != 2");
    if (!cone.is_cone(tol)) throw std::invalid_argument("halfspace_cone_rays_2d: offsets must be 0");
    std::vector<Vec> rays;
    auto push_if_member = [&](Vec d) {
        double n = std::sqrt(dot(d, d));
        if (n <= tol) return;
        d = scale(1.0 / n, d);
        if (!contains(cone, d, tol)) return;
        for (const Vec& r : rays) {
            if (max_norm(sub(r, d)) <= 1e-9) return;
        }
        rays.push_back(d);
    };
    for (const Halfspace& h : cone.halfspaces) {
        // Boundary directions of each halfspace plus its inward normal; these
        // conically span every 2-D polyhedral cone except all of R^2, which a
        // nonzero-normal >=-representation cannot produce.
        push_if_member({h.normal[1], -h.normal[0]});
        push_if_member({-h.normal[1], h.normal[0]});
        push_if_member(h.normal);
    }
    return rays;
}

PointednessResult pointedness_pair(const PolyhedralSet& a, const PolyhedralSet& b, double tol) {
    if (!a.is_cone() || !b.is_cone()) {
        throw std::invalid_argument("pointedness_pair: both arguments must be cones");
    }
    const std::size_t m = a.dim();
    if (m == 0 || b.dim() != m) throw std::invalid_argument("pointedness_pair: dimension mismatch");
    // d in A and -d in B is a polyhedral cone; it contains a nonzero direction
    // iff it meets one of the normalization slices { s * d_j = 1 }.
    std::vector<LinearConstraint> base;
    for (const Halfspace& h : a.halfspaces) base.push_back({h.normal, Rel::Ge, 0.0});
    for (const Halfspace& h : b.halfspaces) {
        Vec neg = scale(-1.0, h.normal);
        base.push_back({neg, Rel::Ge, 0.0});
    }
    for (std::size_t j = 0; j < m; ++j) {
        for (double sign : {1.0, -1.0}) {
            std::vector<LinearConstraint> cons = base;
            LinearConstraint slice;
            slice.coeffs.assign(m, 0.0);
            slice.coeffs[j] = sign;
            slice.rel = Rel::Eq;
            slice.rhs = 1.0;
            cons.push_back(std::move(slice));
            LpResult r = lp_feasible(cons, m, tol);
            if (r.status == LpStatus::NumericalError) {
                throw std::runtime_error("pointedness_pair: LP failed: " + r.error);
            }
            if (r.status == LpStatus::Feasible) {
                return {false, r.witness};
            }
        }
    }
    return {true, std::nullopt};
}

// --- phase-1 simplex ---------------------------------------------------------

LpResult lp_feasible(const std::vector<LinearConstraint>& constraints, std::size_t num_vars,
                     double tol) {
    const std::size_t rows = constraints.size();
    if (rows == 0) return {LpStatus::Feasible, Vec(num_vars, 0.0), ""};

    // Standard form: free variables split as x = xp - xn, one slack/surplus per
    // inequality, one artificial per row, rhs made nonnegative. Minimize the
    // artificial sum; feasible iff the optimum is ~0.
    std::size_t n_slack = 0;
    for (const auto& c : constraints) {
        if (c.rel != Rel::Eq) ++n_slack;
    }
    const std::size_t n_struct = 2 * num_vars + n_slack;
    const std::size_t n_total = n_struct + rows;  // + artificials

    std::vector<Vec> tab(rows, Vec(n_total + 1, 0.0));
    std::size_t slack_idx = 2 * num_vars;
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& c = constraints[i];
        if (c.coeffs.size() != num_vars) {
            throw std::invalid_argument("lp_feasible: constraint arity mismatch");
        }
        for (std::size_t j = 0; j < num_vars; ++j) {
            tab[i][j] = c.coeffs[j];
            tab[i][num_vars + j] = -c.coeffs[j];
        }
        if (c.rel == Rel::Le) tab[i][slack_idx++] = 1.0;
        else if (c.rel == Rel::Ge) tab[i][slack_idx++] = -1.0;
        tab[i][n_total] = c.rhs;
        if (tab[i][n_total] < 0.0) {
            for (auto& v : tab[i]) v = -v;
        }
        tab[i][n_struct + i] = 1.0;  // artificial basis
    }

    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = n_struct + i;

    // Reduced costs of min sum(artificials): z_j - c_j = sum of artificial rows.
    Vec cost(n_total + 1, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j <= n_total; ++j) cost[j] += tab[i][j];
    }

    const std::size_t max_pivots = 200 * (rows + n_total + 1);
    for (std::size_t iter = 0;; ++iter) {
        if (iter > max_pivots) {
            return {LpStatus::NumericalError, {}, "pivot limit exceeded (cycling?)"};
        }
        // Bland: entering = smallest index with positive reduced cost.
        std::size_t enter = n_total;
        for (std::size_t j = 0; j < n_struct; ++j) {
            if (cost[j] > tol) {
                enter = j;
                break;
            }
        }
        if (enter == n_total) break;  // optimal
        // Ratio test, ties broken by smallest basis index (Bland).
        std::size_t leave = rows;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < rows; ++i) {
            if (tab[i][enter] > tol) {
                double ratio = tab[i][n_total] / tab[i][enter];
                if (ratio < best - 1e-15 ||
                    (std::fabs(ratio - best) <= 1e-15 && (leave == rows || basis[i] < basis[leave]))) {
                    best = ratio;
                    leave = i;
                }
            }
        }
        if (leave == rows) {
            // Cannot happen for a bounded phase-1 objective; fail loudly.
            return {LpStatus::NumericalError, {}, "unbounded auxiliary objective"};
        }
        const double piv = tab[leave][enter];
        for (std::size_t j = 0; j <= n_total; ++j) tab[leave][j] /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave) continue;
            double f = tab[i][enter];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= n_total; ++j) tab[i][j] -= f * tab[leave][j];
        }
        {
            double f = cost[enter];
            for (std::size_t j = 0; j <= n_total; ++j) cost[j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
    }

    double art_sum = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        if (basis[i] >= n_struct) art_sum += tab[i][n_total];
    }
    if (art_sum > std::max(tol, 1e-7)) return {LpStatus::Infeasible, {}, ""};

    Vec x(num_vars, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
        if (basis[i] < num_vars) x[basis[i]] += tab[i][n_total];
        else if (basis[i] < 2 * num_vars) x[basis[i] - num_vars] -= tab[i][n_total];
    }
    return {LpStatus::Feasible, std::move(x), ""};
}

}  // namespace domivar
