#ifndef CRITFORGE_EXPR_HPP
#define CRITFORGE_EXPR_HPP

#include <memory>
#include <string>
#include <vector>

#include "critforge/series.hpp"

namespace critforge {

/// Parsed polynomial expression over a declared, ordered variable list.
/// Grammar: + - * ^ with ^ > unary minus > * > binary +/-, * left- and ^
/// right-associative, parentheses, exact rational literals "a/b" (one
/// token, no spaces), and NO implicit multiplication: "2x" is a parse
/// error, "2*x" is not. Unary minus is folded during parsing, so "x - - y"
/// and "x + y" produce equal trees.
class ExprAst {
public:
    struct Node;
    using NodePtr = std::unique_ptr<Node>;

    enum class Kind { Literal, Variable, Neg, Add, Sub, Mul, Pow };

    struct Node {
        Kind kind;
        Rat value;            // Literal
        std::size_t var = 0;  // Variable index into the declared list
        unsigned exp = 0;     // Pow
        NodePtr lhs, rhs;
    };

    ExprAst(NodePtr root, std::vector<std::string> variables);

    const std::vector<std::string>& variables() const noexcept { return vars_; }

    /// Exact evaluation into a truncated series over the declared variables.
    Series to_series(unsigned order) const;

    /// Exact evaluation as a univariate polynomial; requires exactly one
    /// declared variable (no truncation involved).
    RatPoly to_ratpoly() const;

    /// Canonical text that reparses to an equal tree.
    std::string to_string() const;

    friend bool operator==(const ExprAst& a, const ExprAst& b);
    friend bool operator!=(const ExprAst& a, const ExprAst& b) { return !(a == b); }

private:
    NodePtr root_;
    std::vector<std::string> vars_;
};

/// Parse against a declared variable list; throws ParseError with a byte
/// offset on lexical errors, unknown variables and malformed exponents.
ExprAst parse_expr(const std::string& text, const std::vector<std::string>& variables);

/// Split a comma-separated variable declaration like "x,y,z"; validates
/// identifier syntax and uniqueness.
std::vector<std::string> parse_variable_list(const std::string& text);

} // namespace critforge

#endif
