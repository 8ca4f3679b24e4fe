#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domivar/expr.hpp"
#include "domivar/geometry.hpp"

namespace domivar {

struct ProblemInstance;

/// A concrete domination set D(y), carried in whichever representations are
/// derivable. Generator templates in dimension 2 produce both forms; halfspace
/// templates stay halfspace-only and generators are recovered on demand.
struct DomSet {
    std::optional<PolyhedralSet> half;
    std::optional<GeneratorCone> gens;

    bool contains(const Vec& d, double tol = kTolGeo) const;
    bool is_cone(double tol = kTolGeo) const;

    /// Generator list: explicit generators if present, else extreme rays of a
    /// 2-D halfspace cone. Throws for halfspace-only cones in dimension >= 3.
    std::vector<Vec> generator_list(double tol = kTolGeo) const;

    /// Halfspace form, required by scalarization. Throws when absent.
    const PolyhedralSet& halfspaces() const;
};

/// Exact content key (representation bytes); equal keys mean identical
/// evaluated sets. Used to deduplicate repeated structure evaluations.
std::string dom_key(const DomSet& set);

/// True iff the cone `a` is contained in the cone `b`. Checked generator-wise
/// when generators of `a` are available, otherwise by a per-halfspace LP
/// witness search against `b`. On failure `witness` holds a direction of `a`
/// outside `b`.
struct SubsetResult {
    bool subset = false;
    std::optional<Vec> witness;
};
SubsetResult subset_cone(const DomSet& a, const DomSet& b, double tol = kTolGeo);

/// One template for a domination set: either a concrete halfspace list or a
/// list of generators whose coordinates are expressions of y.
struct SetTemplate {
    std::vector<Halfspace> halfspaces;
    std::vector<std::vector<Expr>> generator_exprs;

    bool is_generators() const { return !generator_exprs.empty(); }
};

struct DominationRule {
    Predicate when;
    SetTemplate set;
};

/// D : Y =) Y as an ordered piecewise rule list with a mandatory default.
/// Rules are checked in order, first match wins.
class DominationStructure {
  public:
    DominationStructure() = default;  // unusable until assigned; evaluate() throws
    DominationStructure(std::vector<DominationRule> rules, SetTemplate default_template,
                        std::size_t dim);

    /// Instantiates the first matching template at y. Generator templates are
    /// converted to halfspace form in dimension 2.
    DomSet evaluate(const Vec& y) const;

    std::size_t dim() const { return dim_; }
    std::size_t rule_count() const { return rules_.size(); }

  private:
    std::vector<DominationRule> rules_;
    SetTemplate default_;
    std::size_t dim_;
};

/// Nondomination relation: v <=_N y iff y in v + D(v).
bool leq_N(const DominationStructure& structure, const Vec& v, const Vec& y, double tol = kTolGeo);

/// Efficiency relation: v <=_E y iff v in y - D(y).
bool leq_E(const DominationStructure& structure, const Vec& v, const Vec& y, double tol = kTolGeo);

/// Structural checks behind the nondominated-solutions principle:
///   (F3-a) scalarization clauses on Theta = D(f(x0)) (reported per clause),
///   (F3-b) D(f(x)) + cone(k) contained in D(f(x)) for sampled x,
///   (F3-c) D(f(w)) + D(f(u)) contained in D(f(w)) whenever
///          f(u) - f(w) in D(f(w)), for sampled pairs,
///   (F3-d) D(f(x)) contained in Theta for sampled x.
/// Diagnostic only: failures come back as witnesses, never as errors.
struct F3Report {
    bool a_pass = false;
    std::vector<std::string> a_details;
    bool b_pass = false;
    std::size_t b_tested = 0;
    std::vector<std::string> b_witnesses;
    bool c_pass = false;
    std::size_t c_tested = 0;  // pairs satisfying the premise
    std::vector<std::string> c_witnesses;
    bool d_pass = false;
    std::size_t d_tested = 0;
    std::vector<std::string> d_witnesses;
};
F3Report check_F3(const DominationStructure& structure, const ProblemInstance& instance,
                  std::size_t sample_budget, std::uint64_t seed = 0x5eedULL);

}  // namespace domivar
