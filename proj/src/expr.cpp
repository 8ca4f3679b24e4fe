#include "domivar/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace domivar {

namespace {

enum class Op { Lit, Var, Add, Sub, Mul, Div, Neg, Abs, Min, Max, Pow2, Sqrt };

}  // namespace

struct Expr::Node {
    Op op = Op::Lit;
    double lit = 0.0;
    std::size_t index = 0;  // for Var
    std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

class Parser {
  public:
    Parser(const std::string& text, const std::string& var) : s_(text), var_(var) {}

    NodePtr parse() {
        NodePtr e = sum();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return e;
    }

  private:
    const std::string& s_;
    const std::string& var_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("expression error at position " + std::to_string(pos_) +
                                    " in \"" + s_ + "\": " + what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr make(Op op, NodePtr a = nullptr, NodePtr b = nullptr) {
        auto n = std::make_shared<Expr::Node>();
        n->op = op;
        n->a = std::move(a);
        n->b = std::move(b);
        return n;
    }

    NodePtr sum() {
        NodePtr e = term();
        for (;;) {
            if (eat('+')) e = make(Op::Add, e, term());
            else if (eat('-')) e = make(Op::Sub, e, term());
            else return e;
        }
    }

    NodePtr term() {
        NodePtr e = unary();
        for (;;) {
            if (eat('*')) e = make(Op::Mul, e, unary());
            else if (eat('/')) e = make(Op::Div, e, unary());
            else return e;
        }
    }

    NodePtr unary() {
        if (eat('-')) return make(Op::Neg, unary());
        if (eat('+')) return unary();
        return atom();
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    NodePtr atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            char* end = nullptr;
            double v = std::strtod(s_.c_str() + pos_, &end);
            if (end == s_.c_str() + pos_) fail("bad number");
            pos_ = static_cast<std::size_t>(end - s_.c_str());
            auto n = std::make_shared<Expr::Node>();
            n->op = Op::Lit;
            n->lit = v;
            return n;
        }
        if (c == '(') {
            ++pos_;
            NodePtr e = sum();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        std::string name = ident();
        if (name.empty()) fail("expected a number, '(' or identifier");
        if (name == var_) {
            if (!eat('[')) fail("expected '[' after variable name");
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == start) fail("expected coordinate index");
            std::size_t idx = std::stoul(s_.substr(start, pos_ - start));
            if (!eat(']')) fail("expected ']'");
            auto n = std::make_shared<Expr::Node>();
            n->op = Op::Var;
            n->index = idx;
            return n;
        }
        auto unary_fn = [&](Op op) {
            if (!eat('(')) fail("expected '(' after " + name);
            NodePtr a = sum();
            if (!eat(')')) fail("expected ')'");
            return make(op, a);
        };
        auto binary_fn = [&](Op op) {
            if (!eat('(')) fail("expected '(' after " + name);
            NodePtr a = sum();
            if (!eat(',')) fail("expected ','");
            NodePtr b = sum();
            if (!eat(')')) fail("expected ')'");
            return make(op, a, b);
        };
        if (name == "abs") return unary_fn(Op::Abs);
        if (name == "sqrt") return unary_fn(Op::Sqrt);
        if (name == "pow2") return unary_fn(Op::Pow2);
        if (name == "min") return binary_fn(Op::Min);
        if (name == "max") return binary_fn(Op::Max);
        fail("unknown identifier '" + name + "' (variable is '" + var_ + "')");
    }
};

double eval_node(const Expr::Node& n, const Vec& v) {
    switch (n.op) {
        case Op::Lit: return n.lit;
        case Op::Var:
            if (n.index >= v.size()) {
                throw std::domain_error("expression index " + std::to_string(n.index) +
                                        " out of range for dimension " + std::to_string(v.size()));
            }
            return v[n.index];
        case Op::Add: return eval_node(*n.a, v) + eval_node(*n.b, v);
        case Op::Sub: return eval_node(*n.a, v) - eval_node(*n.b, v);
        case Op::Mul: return eval_node(*n.a, v) * eval_node(*n.b, v);
        case Op::Div: {
            double d = eval_node(*n.b, v);
            if (d == 0.0) throw std::domain_error("division by zero in expression");
            return eval_node(*n.a, v) / d;
        }
        case Op::Neg: return -eval_node(*n.a, v);
        case Op::Abs: return std::fabs(eval_node(*n.a, v));
        case Op::Min: return std::min(eval_node(*n.a, v), eval_node(*n.b, v));
        case Op::Max: return std::max(eval_node(*n.a, v), eval_node(*n.b, v));
        case Op::Pow2: return std::exp2(eval_node(*n.a, v));
        case Op::Sqrt: {
            double a = eval_node(*n.a, v);
            if (a < 0.0) throw std::domain_error("sqrt of a negative value in expression");
            return std::sqrt(a);
        }
    }
    throw std::logic_error("unreachable expression op");
}

}  // namespace

Expr Expr::parse(const std::string& text, const std::string& var) {
    Expr e;
    e.root_ = Parser(text, var).parse();
    e.text_ = text;
    return e;
}

double Expr::eval(const Vec& v) const {
    try {
        return eval_node(*root_, v);
    } catch (const std::domain_error& err) {
        throw std::domain_error(std::string(err.what()) + " while evaluating \"" + text_ + "\" at " +
                                vec_to_string(v));
    }
}

Predicate Predicate::parse(const std::string& text, const std::string& var) {
    Predicate p;
    p.text_ = text;
    // Split on "&&" / "and" at top level; atoms contain no parenthesized
    // connectives, so a plain scan suffices.
    std::vector<std::string> parts;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        else if (text[i] == ')') --depth;
        else if (depth == 0 && i + 1 < text.size() && text[i] == '&' && text[i + 1] == '&') {
            parts.push_back(text.substr(start, i - start));
            start = i + 2;
            ++i;
        } else if (depth == 0 && i + 4 <= text.size() && text.compare(i, 5, " and ") == 0) {
            parts.push_back(text.substr(start, i - start));
            start = i + 5;
            i += 4;
        }
    }
    parts.push_back(text.substr(start));
    for (const std::string& part : parts) {
        // Find the comparison operator.
        std::size_t at = std::string::npos;
        Cmp cmp = Cmp::Eq;
        std::size_t oplen = 0;
        for (std::size_t i = 0; i < part.size(); ++i) {
            char c = part[i];
            if (c == '<' || c == '>' || c == '=') {
                at = i;
                bool eq = i + 1 < part.size() && part[i + 1] == '=';
                oplen = eq ? 2 : 1;
                if (c == '<') cmp = eq ? Cmp::Le : Cmp::Lt;
                else if (c == '>') cmp = eq ? Cmp::Ge : Cmp::Gt;
                else cmp = Cmp::Eq;
                break;
            }
        }
        if (at == std::string::npos) {
            throw std::invalid_argument("predicate atom without comparison: \"" + part + "\"");
        }
        Atom a{Expr::parse(part.substr(0, at), var), cmp, Expr::parse(part.substr(at + oplen), var)};
        p.atoms_.push_back(std::move(a));
    }
    return p;
}

bool Predicate::eval(const Vec& v) const {
    for (const Atom& a : atoms_) {
        double l = a.lhs.eval(v);
        double r = a.rhs.eval(v);
        bool ok = false;
        switch (a.cmp) {
            case Cmp::Lt: ok = l < r; break;
            case Cmp::Le: ok = l <= r; break;
            case Cmp::Eq: ok = l == r; break;
            case Cmp::Ge: ok = l >= r; break;
            case Cmp::Gt: ok = l > r; break;
        }
        if (!ok) return false;
    }
    return true;
}

}  // namespace domivar
