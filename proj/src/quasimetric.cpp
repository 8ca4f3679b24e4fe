#include "domivar/quasimetric.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace domivar {

GroundSet GroundSet::finite(std::vector<std::string> labels, std::vector<Vec> coords) {
    if (labels.size() != coords.size() || labels.empty()) {
        throw std::invalid_argument("ground set: labels and coordinates must be nonempty and match");
    }
    GroundSet g;
    g.labels_ = std::move(labels);
    g.coords_ = std::move(coords);
    for (std::size_t i = 0; i < g.labels_.size(); ++i) {
        if (!g.index_.emplace(g.labels_[i], i).second) {
            throw std::invalid_argument("ground set: duplicate label \"" + g.labels_[i] + "\"");
        }
        if (!all_finite(g.coords_[i]) || g.coords_[i].size() != g.coords_[0].size()) {
            throw std::invalid_argument("ground set: bad coordinates for \"" + g.labels_[i] + "\"");
        }
    }
    return g;
}

GroundSet GroundSet::grid(Vec lower, Vec upper, Vec step, std::size_t max_points) {
    const std::size_t d = lower.size();
    if (d == 0 || upper.size() != d || step.size() != d) {
        throw std::invalid_argument("grid: lower/upper/step dimensions must agree and be nonzero");
    }
    std::vector<std::size_t> counts(d);
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (step[i] <= 0.0 || upper[i] < lower[i]) {
            throw std::invalid_argument("grid: need step > 0 and upper >= lower");
        }
        counts[i] = static_cast<std::size_t>(std::floor((upper[i] - lower[i]) / step[i] + 1e-9)) + 1;
        if (counts[i] == 0 || total > max_points / counts[i]) {
            throw std::invalid_argument("grid: more than " + std::to_string(max_points) + " points");
        }
        total *= counts[i];
    }
    GroundSet g;
    g.is_grid_ = true;
    g.lower_ = lower;
    g.upper_ = upper;
    g.labels_.reserve(total);
    g.coords_.reserve(total);
    std::size_t width = std::to_string(total - 1).size();
    std::vector<std::size_t> idx(d, 0);
    for (std::size_t n = 0; n < total; ++n) {
        Vec p(d);
        for (std::size_t i = 0; i < d; ++i) p[i] = lower[i] + static_cast<double>(idx[i]) * step[i];
        std::string lab = std::to_string(n);
        lab = "g" + std::string(width - lab.size(), '0') + lab;
        g.index_.emplace(lab, n);
        g.labels_.push_back(std::move(lab));
        g.coords_.push_back(std::move(p));
        for (std::size_t i = d; i-- > 0;) {
            if (++idx[i] < counts[i]) break;
            idx[i] = 0;
        }
    }
    return g;
}

std::size_t GroundSet::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw std::out_of_range("unknown ground label \"" + label + "\"");
    return it->second;
}

double q(const QuasimetricSpec& spec, const GroundSet& ground, std::size_t x, std::size_t u) {
    if (x == u) return 0.0;
    if (const auto* wa = std::get_if<WeightedAsymmetric>(&spec.kind)) {
        const Vec& a = ground.coord(x);
        const Vec& b = ground.coord(u);
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            double fwd = b[i] - a[i];
            s += wa->alpha[i] * std::max(fwd, 0.0) + wa->beta[i] * std::max(-fwd, 0.0);
        }
        return s;
    }
    if (const auto* sm = std::get_if<ScaledMetric>(&spec.kind)) {
        return sm->c * p_norm(sub(ground.coord(u), ground.coord(x)), sm->p);
    }
    const auto& t = std::get<TableQuasimetric>(spec.kind);
    return t.matrix[x][u];
}

namespace {

std::string triple_msg(const GroundSet& g, std::size_t a, std::size_t b, std::size_t c, double lhs,
                       double rhs) {
    std::ostringstream os;
    os << "triangle violated: q(" << g.label(a) << "," << g.label(c) << ") = " << lhs << " > "
       << rhs << " = q(" << g.label(a) << "," << g.label(b) << ") + q(" << g.label(b) << ","
       << g.label(c) << ")";
    return os.str();
}

}  // namespace

AxiomReport validate_axioms(const QuasimetricSpec& spec, const GroundSet& ground,
                            std::size_t sample_budget, std::uint64_t seed) {
    AxiomReport rep;
    const std::size_t n = ground.size();
    constexpr double tol = 1e-12;

    if (const auto* t = std::get_if<TableQuasimetric>(&spec.kind)) {
        if (t->labels.size() != n || t->matrix.size() != n) {
            rep.violations.push_back("table size does not match ground set");
            return rep;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (q(spec, ground, i, i) != 0.0) {
            rep.violations.push_back("q(" + ground.label(i) + "," + ground.label(i) + ") != 0");
        }
        for (std::size_t j = 0; j < n && rep.violations.size() < 8; ++j) {
            double v = q(spec, ground, i, j);
            if (!(v >= 0.0) || !std::isfinite(v)) {
                rep.violations.push_back("q(" + ground.label(i) + "," + ground.label(j) +
                                         ") is negative or non-finite");
            }
        }
    }

    // Formula-backed specs satisfy the triangle inequality by construction
    // (weights >= 0, p-norm subadditivity); still verify, exhaustively when small.
    if (n <= 200) {
        rep.exhaustive = true;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                double qab = q(spec, ground, a, b);
                for (std::size_t c = 0; c < n; ++c) {
                    ++rep.triples_checked;
                    double lhs = q(spec, ground, a, c);
                    double rhs = qab + q(spec, ground, b, c);
                    if (lhs > rhs + tol && rep.violations.size() < 8) {
                        rep.violations.push_back(triple_msg(ground, a, b, c, lhs, rhs));
                    }
                }
            }
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t it = 0; it < sample_budget; ++it) {
            std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
            ++rep.triples_checked;
            double lhs = q(spec, ground, a, c);
            double rhs = q(spec, ground, a, b) + q(spec, ground, b, c);
            if (lhs > rhs + tol && rep.violations.size() < 8) {
                rep.violations.push_back(triple_msg(ground, a, b, c, lhs, rhs));
            }
        }
    }

    if (const auto* sm = std::get_if<ScaledMetric>(&spec.kind)) {
        if (sm->c == 0.0) rep.warnings.push_back("degenerate: all distances 0");
    }
    rep.pass = rep.violations.empty();
    return rep;
}

HausdorffReport forward_hausdorff_check(const QuasimetricSpec& spec, const GroundSet& ground) {
    HausdorffReport rep;
    const std::size_t n = ground.size();
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t a = 0; a < n; ++a) {
            if (a == p) continue;
            if (q(spec, ground, p, a) == 0.0) {
                // The eventually-constant sequence at p forward-converges to
                // both a and p itself.
                rep.hausdorff = false;
                rep.witness = {ground.label(p), ground.label(a), ground.label(p)};
                return rep;
            }
        }
    }
    rep.hausdorff = true;
    return rep;
}

bool is_forward_cauchy(const std::vector<std::size_t>& seq, const QuasimetricSpec& spec,
                       const GroundSet& ground, double tol) {
    const std::size_t len = seq.size();
    if (len <= 1) return true;
    for (std::size_t cut = 0; cut + 1 < len; ++cut) {
        double worst = 0.0;
        for (std::size_t i = cut; i < len; ++i) {
            for (std::size_t j = i + 1; j < len; ++j) {
                worst = std::max(worst, q(spec, ground, seq[i], seq[j]));
            }
        }
        if (worst < tol) return true;
    }
    return false;
}

}  // namespace domivar
