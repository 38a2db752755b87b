#include "critforge/expr.hpp"

#include <algorithm>
#include <cctype>

#include "critforge/errors.hpp"

namespace critforge {

namespace {

using Node = ExprAst::Node;
using NodePtr = ExprAst::NodePtr;
using Kind = ExprAst::Kind;

NodePtr make_node(Kind k) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    return n;
}

NodePtr literal(Rat v) {
    auto n = make_node(Kind::Literal);
    n->value = std::move(v);
    return n;
}

// Unary-minus folding: negated literals fold into the literal, double
// negations cancel, and +/- absorb a negated right operand.
NodePtr negate(NodePtr e) {
    if (e->kind == Kind::Literal) return literal(-e->value);
    if (e->kind == Kind::Neg) return std::move(e->lhs);
    auto n = make_node(Kind::Neg);
    n->lhs = std::move(e);
    return n;
}

NodePtr binary(Kind k, NodePtr a, NodePtr b) {
    if (k == Kind::Sub && b->kind == Kind::Neg) return binary(Kind::Add, std::move(a), std::move(b->lhs));
    if (k == Kind::Add && b->kind == Kind::Neg) return binary(Kind::Sub, std::move(a), std::move(b->lhs));
    auto n = make_node(k);
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

struct Token {
    enum class Type { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
    Type type;
    std::size_t offset;
    Rat number;
    std::string ident;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        tok_.offset = pos_;
        if (pos_ >= s_.size()) {
            tok_.type = Token::Type::End;
            return;
        }
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string num = s_.substr(start, pos_ - start);
            if (pos_ < s_.size() && s_[pos_] == '/') {
                // Rational literal: the denominator digits must be adjacent.
                std::size_t den_start = pos_ + 1;
                if (den_start >= s_.size() ||
                    !std::isdigit(static_cast<unsigned char>(s_[den_start])))
                    throw ParseError("expected digits after '/' in rational literal", pos_);
                pos_ = den_start;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                std::string den = s_.substr(den_start, pos_ - den_start);
                mpz_class dz(den);
                if (dz == 0)
                    throw ParseError("zero denominator in rational literal", den_start);
                tok_.number = Rat(mpz_class(num), dz);
            } else {
                tok_.number = Rat(mpz_class(num));
            }
            tok_.type = Token::Type::Number;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                        s_[pos_] == '_'))
                ++pos_;
            tok_.type = Token::Type::Ident;
            tok_.ident = s_.substr(start, pos_ - start);
            return;
        }
        switch (c) {
            case '+': tok_.type = Token::Type::Plus; break;
            case '-': tok_.type = Token::Type::Minus; break;
            case '*': tok_.type = Token::Type::Star; break;
            case '^': tok_.type = Token::Type::Caret; break;
            case '(': tok_.type = Token::Type::LParen; break;
            case ')': tok_.type = Token::Type::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", pos_);
        }
        ++pos_;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    Token tok_;
};

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : lex_(text), vars_(vars) {}

    NodePtr parse() {
        NodePtr e = parse_sum();
        const Token& t = lex_.peek();
        if (t.type != Token::Type::End)
            throw ParseError("expected operator or end of input", t.offset);
        return e;
    }

private:
    NodePtr parse_sum() {
        NodePtr e = parse_product();
        while (true) {
            const Token& t = lex_.peek();
            if (t.type == Token::Type::Plus) {
                lex_.take();
                e = binary(Kind::Add, std::move(e), parse_product());
            } else if (t.type == Token::Type::Minus) {
                lex_.take();
                e = binary(Kind::Sub, std::move(e), parse_product());
            } else {
                return e;
            }
        }
    }

    NodePtr parse_product() {
        NodePtr e = parse_unary();
        while (lex_.peek().type == Token::Type::Star) {
            lex_.take();
            e = binary(Kind::Mul, std::move(e), parse_unary());
        }
        return e;
    }

    NodePtr parse_unary() {
        if (lex_.peek().type == Token::Type::Minus) {
            lex_.take();
            return negate(parse_unary());
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (lex_.peek().type != Token::Type::Caret) return base;
        lex_.take();
        auto n = make_node(Kind::Pow);
        n->lhs = std::move(base);
        n->exp = parse_exponent();
        return n;
    }

    // Exponents are non-negative integers; a chained b^c exponent is folded
    // right-associatively into one integer.
    unsigned parse_exponent() {
        const Token t = lex_.take();
        if (t.type != Token::Type::Number || !t.number.is_integer() || t.number.sign() < 0)
            throw ParseError("malformed exponent: expected a non-negative integer", t.offset);
        if (t.number.num() > 1000000)
            throw ParseError("exponent too large", t.offset);
        unsigned base = static_cast<unsigned>(t.number.num().get_ui());
        if (lex_.peek().type != Token::Type::Caret) return base;
        lex_.take();
        const unsigned upper = parse_exponent();
        unsigned long long acc = 1;
        for (unsigned i = 0; i < upper; ++i) {
            acc *= base;
            if (acc > 1000000)
                throw ParseError("exponent too large", t.offset);
        }
        return static_cast<unsigned>(acc);
    }

    NodePtr parse_atom() {
        const Token t = lex_.take();
        switch (t.type) {
            case Token::Type::Number:
                return literal(t.number);
            case Token::Type::Ident: {
                auto it = std::find(vars_.begin(), vars_.end(), t.ident);
                if (it == vars_.end())
                    throw ParseError("unknown variable '" + t.ident + "'", t.offset);
                auto n = make_node(Kind::Variable);
                n->var = static_cast<std::size_t>(it - vars_.begin());
                return n;
            }
            case Token::Type::LParen: {
                NodePtr e = parse_sum();
                const Token close = lex_.take();
                if (close.type != Token::Type::RParen)
                    throw ParseError("expected ')'", close.offset);
                return e;
            }
            default:
                throw ParseError("expected a value", t.offset);
        }
    }

    Lexer lex_;
    const std::vector<std::string>& vars_;
};

bool equal(const NodePtr& a, const NodePtr& b) {
    if (!a || !b) return !a && !b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Kind::Literal: return a->value == b->value;
        case Kind::Variable: return a->var == b->var;
        case Kind::Pow: return a->exp == b->exp && equal(a->lhs, b->lhs);
        case Kind::Neg: return equal(a->lhs, b->lhs);
        default: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    }
}

RatPoly eval_poly(const NodePtr& n) {
    switch (n->kind) {
        case Kind::Literal: return RatPoly(n->value);
        case Kind::Variable: return RatPoly::t();
        case Kind::Neg: return -eval_poly(n->lhs);
        case Kind::Add: return eval_poly(n->lhs) + eval_poly(n->rhs);
        case Kind::Sub: return eval_poly(n->lhs) - eval_poly(n->rhs);
        case Kind::Mul: return eval_poly(n->lhs) * eval_poly(n->rhs);
        case Kind::Pow: {
            RatPoly acc(1);
            RatPoly base = eval_poly(n->lhs);
            for (unsigned i = 0; i < n->exp; ++i) acc *= base;
            return acc;
        }
    }
    throw ContractViolation("unreachable expression kind");
}

Series eval(const NodePtr& n, std::size_t nvars, unsigned order) {
    switch (n->kind) {
        case Kind::Literal: return Series::constant(nvars, order, n->value);
        case Kind::Variable: return Series::variable(nvars, n->var, order);
        case Kind::Neg: return -eval(n->lhs, nvars, order);
        case Kind::Add: return eval(n->lhs, nvars, order) + eval(n->rhs, nvars, order);
        case Kind::Sub: return eval(n->lhs, nvars, order) - eval(n->rhs, nvars, order);
        case Kind::Mul: return eval(n->lhs, nvars, order) * eval(n->rhs, nvars, order);
        case Kind::Pow: {
            Series acc = Series::constant(nvars, order, Rat(1));
            Series base = eval(n->lhs, nvars, order);
            for (unsigned i = 0; i < n->exp; ++i) acc = acc * base;
            return acc;
        }
    }
    throw ContractViolation("unreachable expression kind");
}

int precedence(Kind k) {
    switch (k) {
        case Kind::Add:
        case Kind::Sub: return 1;
        case Kind::Mul: return 2;
        case Kind::Neg: return 3;
        case Kind::Pow: return 4;
        default: return 5;
    }
}

std::string print(const NodePtr& n, const std::vector<std::string>& vars) {
    auto wrap = [&](const NodePtr& child, int min_prec) {
        std::string s = print(child, vars);
        bool negative_literal = child->kind == Kind::Literal && child->value.sign() < 0;
        if (precedence(child->kind) < min_prec || (negative_literal && min_prec > 1))
            return "(" + s + ")";
        return s;
    };
    switch (n->kind) {
        case Kind::Literal: return n->value.to_string();
        case Kind::Variable: return vars.at(n->var);
        case Kind::Neg: return "-" + wrap(n->lhs, precedence(Kind::Neg) + 1);
        case Kind::Add: return wrap(n->lhs, 1) + " + " + wrap(n->rhs, 2);
        case Kind::Sub: return wrap(n->lhs, 1) + " - " + wrap(n->rhs, 2);
        case Kind::Mul: return wrap(n->lhs, 2) + "*" + wrap(n->rhs, 3);
        case Kind::Pow: return wrap(n->lhs, 5) + "^" + std::to_string(n->exp);
    }
    throw ContractViolation("unreachable expression kind");
}

} // namespace

ExprAst::ExprAst(NodePtr root, std::vector<std::string> variables)
    : root_(std::move(root)), vars_(std::move(variables)) {}

Series ExprAst::to_series(unsigned order) const { return eval(root_, vars_.size(), order); }

RatPoly ExprAst::to_ratpoly() const {
    if (vars_.size() != 1)
        throw DomainError("bad-polynomial",
                          "polynomial evaluation needs exactly one declared variable");
    return eval_poly(root_);
}

std::string ExprAst::to_string() const { return print(root_, vars_); }

bool operator==(const ExprAst& a, const ExprAst& b) {
    return a.vars_ == b.vars_ && equal(a.root_, b.root_);
}

ExprAst parse_expr(const std::string& text, const std::vector<std::string>& variables) {
    Parser parser(text, variables);
    return ExprAst(parser.parse(), variables);
}

std::vector<std::string> parse_variable_list(const std::string& text) {
    std::vector<std::string> vars;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string name = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        // Trim surrounding spaces.
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.front())))
            name.erase(name.begin());
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
            name.pop_back();
        if (name.empty())
            throw ParseError("empty variable name in declaration", pos);
        if (!std::isalpha(static_cast<unsigned char>(name.front())) && name.front() != '_')
            throw ParseError("variable must start with a letter: '" + name + "'", pos);
        for (char c : name)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                throw ParseError("bad character in variable name '" + name + "'", pos);
        if (std::find(vars.begin(), vars.end(), name) != vars.end())
            throw ParseError("duplicate variable '" + name + "'", pos);
        vars.push_back(std::move(name));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return vars;
}

} // namespace critforge
