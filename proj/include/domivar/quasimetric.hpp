#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "domivar/geometry.hpp"

namespace domivar {

/// Finite decision space: either explicitly labeled points or a uniform grid.
/// Grid points are enumerated row-major with zero-padded index labels so that
/// lexicographic label order equals enumeration order.
class GroundSet {
  public:
    static GroundSet finite(std::vector<std::string> labels, std::vector<Vec> coords);
    static GroundSet grid(Vec lower, Vec upper, Vec step, std::size_t max_points = 1000000);

    std::size_t size() const { return coords_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Vec>& coords() const { return coords_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const Vec& coord(std::size_t i) const { return coords_[i]; }
    bool is_grid() const { return is_grid_; }

    /// Index of a label; throws std::out_of_range with the label on miss.
    std::size_t index_of(const std::string& label) const;

    /// For grid grounds: the coordinate box, used by range diagnostics.
    const Vec& grid_lower() const { return lower_; }
    const Vec& grid_upper() const { return upper_; }

  private:
    std::vector<std::string> labels_;
    std::vector<Vec> coords_;
    std::map<std::string, std::size_t> index_;
    bool is_grid_ = false;
    Vec lower_, upper_;
};

/// Per-dimension weighted asymmetric quasimetric:
/// q(x,u) = sum_i alpha_i * max(u_i - x_i, 0) + beta_i * max(x_i - u_i, 0).
struct WeightedAsymmetric {
    Vec alpha;  // forward weights, >= 0
    Vec beta;   // backward weights, >= 0
};

/// q(x,u) = c * ||u - x||_p with c >= 0 and p >= 1 (p may be infinity).
struct ScaledMetric {
    double c = 1.0;
    double p = 2.0;
};

/// Full quasidistance table over a finite ground set, indexed by label.
/// Validated at load time; a triangle-inequality violation is a hard error.
struct TableQuasimetric {
    std::vector<std::string> labels;
    std::vector<Vec> matrix;  // matrix[i][j] = q(labels[i], labels[j])
};

struct QuasimetricSpec {
    std::variant<WeightedAsymmetric, ScaledMetric, TableQuasimetric> kind;
};

/// Quasidistance between two ground points (by index into `ground`).
double q(const QuasimetricSpec& spec, const GroundSet& ground, std::size_t x, std::size_t u);

/// Positivity and triangle-inequality validation. Exhaustive over all triples
/// up to |X| <= 200; uniformly sampled (seeded, budgeted) above that.
struct AxiomReport {
    bool pass = false;
    bool exhaustive = false;
    std::size_t triples_checked = 0;
    std::vector<std::string> violations;  // empty iff pass
    std::vector<std::string> warnings;
};
AxiomReport validate_axioms(const QuasimetricSpec& spec, const GroundSet& ground,
                            std::size_t sample_budget = 200000, std::uint64_t seed = 0x5eedULL);

/// Forward-Hausdorff test for finite spaces: fails iff some point has two
/// distinct forward-limits, i.e. there are p and a != b with
/// q(p,a) = q(p,b) = 0 (b may be p itself).
struct HausdorffReport {
    bool hausdorff = false;
    std::vector<std::string> witness;  // {p, a, b} on failure
};
HausdorffReport forward_hausdorff_check(const QuasimetricSpec& spec, const GroundSet& ground);

/// Diagnostic on a finite prefix: true iff some cut N (with at least one tail
/// pair inside the prefix) has max_{N <= n < n+m < len} q(x_n, x_{n+m}) < tol.
bool is_forward_cauchy(const std::vector<std::size_t>& seq, const QuasimetricSpec& spec,
                       const GroundSet& ground, double tol);

}  // namespace domivar
