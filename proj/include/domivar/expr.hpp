#pragma once

#include <memory>
#include <string>
#include <vector>

#include "domivar/geometry.hpp"

namespace domivar {

/// Arithmetic expressions over one vector variable, shared by instance files.
/// Grammar: literals, <var>[i], e+e, e-e, e*e, e/e, abs(e), min(e,e),
/// max(e,e), pow2(e) (= 2^e), sqrt(e). Unary minus is accepted.
class Expr {
  public:
    /// Parses `text` with `var` as the vector variable name ("y" or "x").
    /// Throws std::invalid_argument with position info on malformed input.
    static Expr parse(const std::string& text, const std::string& var);

    /// Evaluates at `v`. Division by zero, sqrt of a negative number and
    /// out-of-range indices throw std::domain_error naming the subterm.
    double eval(const Vec& v) const;

    const std::string& text() const { return text_; }

    struct Node;  // exposed for the parser implementation

  private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

/// Conjunction of atomic comparisons between expressions, e.g.
/// "y[0] < y[1] && y[1] >= 0". Connective: "&&" (or "and"); comparison
/// operators: < <= = == >= >. Strict comparisons are evaluated exactly on the
/// computed doubles (tolerance 0); boundary cases belong in explicit "=" rules.
class Predicate {
  public:
    static Predicate parse(const std::string& text, const std::string& var);

    bool eval(const Vec& v) const;

    const std::string& text() const { return text_; }

  private:
    enum class Cmp { Lt, Le, Eq, Ge, Gt };
    struct Atom {
        Expr lhs;
        Cmp cmp;
        Expr rhs;
    };
    std::vector<Atom> atoms_;
    std::string text_;
};

}  // namespace domivar
