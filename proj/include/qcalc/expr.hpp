#pragma once

/**
 * @file expr.hpp
 * @brief Parser and evaluator for one-variable function expressions.
 *
 * Grammar (whitespace is insignificant, positions are 0-based characters):
 *
 *   expression := term (('+' | '-') term)*
 *   term       := unary (('*' | '/') unary)*
 *   unary      := '-' unary | power
 *   power      := atom ('^' exponent)?
 *   exponent   := ['-'] INT ('^' exponent)?      -- integer towers fold right
 *   atom       := NUM | 'x' | FN '(' expression ')' | '(' expression ')'
 *   FN         := 'exp' | 'log' | 'sin' | 'cos'
 *   NUM        := digits ['.' digits]            -- decimals convert exactly
 *
 * '^' binds tighter than unary minus; '*' '/' bind tighter than '+' '-';
 * binary operators associate left. Rationals are written as quotients
 * ("1/2*x^3"), which the exact evaluation path keeps exact.
 */

#include "qcalc/jet.hpp"
#include "qcalc/polynomial.hpp"
#include "qcalc/qoperator.hpp"
#include "qcalc/rational.hpp"

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qcalc {

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

enum class BuiltinFn { exp_fn, log_fn, sin_fn, cos_fn };

inline const char* builtin_name(BuiltinFn fn) {
    switch (fn) {
        case BuiltinFn::exp_fn: return "exp";
        case BuiltinFn::log_fn: return "log";
        case BuiltinFn::sin_fn: return "sin";
        case BuiltinFn::cos_fn: return "cos";
    }
    return "?";
}

struct LiteralNode {
    Rational value;
};
struct VariableNode {};
struct NegateNode {
    ExprPtr operand;
};
struct BinaryNode {
    char op;  // '+', '-', '*', '/'
    ExprPtr lhs;
    ExprPtr rhs;
};
struct PowerNode {
    ExprPtr base;
    long long exponent;
};
struct CallNode {
    BuiltinFn fn;
    ExprPtr arg;
};

struct ExprNode {
    std::variant<LiteralNode, VariableNode, NegateNode, BinaryNode, PowerNode, CallNode> node;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, std::string expected)
        : std::runtime_error("syntax error at position " + std::to_string(position) + ": expected " +
                             expected),
          position_(position),
          expected_(std::move(expected)) {}

    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

/// Evaluation failure tagged with the offending subexpression.
class EvalError : public std::domain_error {
public:
    EvalError(const std::string& what, const std::string& subexpression)
        : std::domain_error(what + " in '" + subexpression + "'") {}
};

namespace detail {

inline ExprPtr make_node(ExprNode node) { return std::make_shared<const ExprNode>(std::move(node)); }

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr root = parse_expression();
        skip_spaces();
        if (pos_ != text_.size()) throw ParseError(pos_, "end of input or an operator");
        return root;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int depth_ = 0;

    struct DepthGuard {
        explicit DepthGuard(ExprParser& parser) : parser_(parser) {
            if (++parser_.depth_ > 4096) throw ParseError(parser_.pos_, "a less deeply nested expression");
        }
        ~DepthGuard() { --parser_.depth_; }
        ExprParser& parser_;
    };

    void skip_spaces() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    char peek() {
        skip_spaces();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExprPtr parse_expression() {
        DepthGuard guard(*this);
        ExprPtr lhs = parse_term();
        while (true) {
            const char op = peek();
            if (op != '+' && op != '-') break;
            ++pos_;
            ExprPtr rhs = parse_term();
            lhs = make_node({BinaryNode{op, std::move(lhs), std::move(rhs)}});
        }
        return lhs;
    }

    ExprPtr parse_term() {
        DepthGuard guard(*this);
        ExprPtr lhs = parse_unary();
        while (true) {
            const char op = peek();
            if (op != '*' && op != '/') break;
            ++pos_;
            ExprPtr rhs = parse_unary();
            // "p/q" is rational-literal syntax: fold a quotient of literals
            // so that printing and reparsing reproduce the same node
            if (op == '/') {
                const auto* lhs_lit = std::get_if<LiteralNode>(&lhs->node);
                const auto* rhs_lit = std::get_if<LiteralNode>(&rhs->node);
                if (lhs_lit && rhs_lit && rhs_lit->value != 0) {
                    lhs = make_node({LiteralNode{lhs_lit->value / rhs_lit->value}});
                    continue;
                }
            }
            lhs = make_node({BinaryNode{op, std::move(lhs), std::move(rhs)}});
        }
        return lhs;
    }

    ExprPtr parse_unary() {
        DepthGuard guard(*this);
        if (consume('-')) return make_node({NegateNode{parse_unary()}});
        return parse_power();
    }

    ExprPtr parse_power() {
        DepthGuard guard(*this);
        ExprPtr base = parse_atom();
        if (peek() != '^') return base;
        ++pos_;
        return make_node({PowerNode{std::move(base), parse_exponent()}});
    }

    // integer exponents only; towers like 2^3^2 fold right-associatively
    // into a single integer at parse time
    long long parse_exponent() {
        skip_spaces();
        bool negative = consume('-');
        skip_spaces();
        const std::size_t start = pos_;
        unsigned long long value = 0;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            value = value * 10 + static_cast<unsigned long long>(text_[pos_] - '0');
            if (value > (1ULL << 20)) throw ParseError(start, "a smaller integer exponent");
            ++pos_;
        }
        if (pos_ == start) throw ParseError(pos_, "an integer exponent");
        long long exponent = negative ? -static_cast<long long>(value) : static_cast<long long>(value);
        if (peek() == '^') {
            ++pos_;
            const long long upper = parse_exponent();
            if (negative || exponent < 0) throw ParseError(start, "a nonnegative base in an exponent tower");
            if (upper < 0) throw ParseError(start, "a nonnegative exponent in an exponent tower");
            long long folded = 1;
            for (long long i = 0; i < upper; ++i) {
                folded *= exponent;
                if (folded > (1LL << 20) || folded < -(1LL << 20)) {
                    throw ParseError(start, "a smaller integer exponent");
                }
            }
            exponent = folded;
        }
        return exponent;
    }

    ExprPtr parse_atom() {
        DepthGuard guard(*this);
        skip_spaces();
        if (pos_ >= text_.size()) throw ParseError(pos_, "a number, 'x', a function call, or '('");
        const char c = text_[pos_];

        if (c == '(') {
            ++pos_;
            ExprPtr inner = parse_expression();
            if (!consume(')')) throw ParseError(pos_, "')'");
            return inner;
        }
        if ((c >= '0' && c <= '9') || c == '.') return parse_number();
        if (c >= 'a' && c <= 'z') return parse_identifier();
        throw ParseError(pos_, "a number, 'x', a function call, or '('");
    }

    ExprPtr parse_number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        }
        const auto value = parse_rational(text_.substr(start, pos_ - start));
        if (!value) throw ParseError(start, "a numeric literal");
        return make_node({LiteralNode{*value}});
    }

    ExprPtr parse_identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z') ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        if (name == "x") return make_node({VariableNode{}});
        BuiltinFn fn;
        if (name == "exp") {
            fn = BuiltinFn::exp_fn;
        } else if (name == "log") {
            fn = BuiltinFn::log_fn;
        } else if (name == "sin") {
            fn = BuiltinFn::sin_fn;
        } else if (name == "cos") {
            fn = BuiltinFn::cos_fn;
        } else {
            throw ParseError(start, "'x' or one of exp, log, sin, cos");
        }
        if (!consume('(')) throw ParseError(pos_, "'(' after a function name");
        ExprPtr arg = parse_expression();
        if (!consume(')')) throw ParseError(pos_, "')'");
        return make_node({CallNode{fn, std::move(arg)}});
    }
};

enum class PrintContext { top, add_rhs, mul_lhs, mul_rhs, unary, power_base };

inline void print_node(const ExprNode& node, std::string& out, PrintContext context);

inline bool needs_parens(const ExprNode& node, PrintContext context) {
    return std::visit(
        [context](const auto& n) -> bool {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, VariableNode> || std::is_same_v<N, CallNode>) {
                return false;
            } else if constexpr (std::is_same_v<N, LiteralNode>) {
                // negative or fractional literals are not atoms in the grammar
                if (n.value < 0) return context != PrintContext::top && context != PrintContext::add_rhs;
                if (denominator(n.value) != 1) {
                    return context == PrintContext::mul_rhs || context == PrintContext::unary ||
                           context == PrintContext::power_base;
                }
                return false;
            } else if constexpr (std::is_same_v<N, NegateNode>) {
                return context != PrintContext::top && context != PrintContext::add_rhs;
            } else if constexpr (std::is_same_v<N, PowerNode>) {
                return context == PrintContext::power_base;
            } else {  // BinaryNode
                if (n.op == '+' || n.op == '-') return context != PrintContext::top;
                return context == PrintContext::mul_rhs || context == PrintContext::unary ||
                       context == PrintContext::power_base;
            }
        },
        node.node);
}

inline void print_node(const ExprNode& node, std::string& out, PrintContext context) {
    const bool parens = needs_parens(node, context);
    if (parens) out += '(';
    std::visit(
        [&out](const auto& n) {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, LiteralNode>) {
                out += qcalc::to_string(n.value);
            } else if constexpr (std::is_same_v<N, VariableNode>) {
                out += 'x';
            } else if constexpr (std::is_same_v<N, NegateNode>) {
                out += '-';
                print_node(*n.operand, out, PrintContext::unary);
            } else if constexpr (std::is_same_v<N, BinaryNode>) {
                const bool additive = (n.op == '+' || n.op == '-');
                print_node(*n.lhs, out, additive ? PrintContext::top : PrintContext::mul_lhs);
                out += n.op;
                print_node(*n.rhs, out, additive ? PrintContext::add_rhs : PrintContext::mul_rhs);
            } else if constexpr (std::is_same_v<N, PowerNode>) {
                print_node(*n.base, out, PrintContext::power_base);
                out += '^';
                if (n.exponent < 0) out += '-';
                out += std::to_string(n.exponent < 0 ? -n.exponent : n.exponent);
            } else {  // CallNode
                out += builtin_name(n.fn);
                out += '(';
                print_node(*n.arg, out, PrintContext::top);
                out += ')';
            }
        },
        node.node);
    if (parens) out += ')';
}

}  // namespace detail

inline ExprPtr parse_expression(std::string_view text) {
    return detail::ExprParser(text).parse();
}

inline std::string to_string(const ExprNode& node) {
    std::string out;
    detail::print_node(node, out, detail::PrintContext::top);
    return out;
}

inline std::string to_string(const ExprPtr& node) {
    return node ? to_string(*node) : std::string("<null>");
}

/// Bottom-up jet evaluation; order 0 doubles as plain scalar evaluation.
/// Domain violations carry the offending subexpression in the message.
template <ScalarType T>
Jet<T> evaluate_jet(const ExprNode& node, const T& center, int order) {
    return std::visit(
        [&](const auto& n) -> Jet<T> {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, LiteralNode>) {
                return Jet<T>::constant(from_rational<T>(n.value), center, order);
            } else if constexpr (std::is_same_v<N, VariableNode>) {
                return Jet<T>::variable(center, order);
            } else if constexpr (std::is_same_v<N, NegateNode>) {
                return -evaluate_jet(*n.operand, center, order);
            } else if constexpr (std::is_same_v<N, BinaryNode>) {
                Jet<T> lhs = evaluate_jet(*n.lhs, center, order);
                Jet<T> rhs = evaluate_jet(*n.rhs, center, order);
                switch (n.op) {
                    case '+': return lhs + rhs;
                    case '-': return lhs - rhs;
                    case '*': return lhs * rhs;
                    default:
                        if (is_zero(rhs.coeff(0))) {
                            throw EvalError("division by zero constant term", to_string(node));
                        }
                        return lhs / rhs;
                }
            } else if constexpr (std::is_same_v<N, PowerNode>) {
                Jet<T> base = evaluate_jet(*n.base, center, order);
                if (n.exponent < 0 && is_zero(base.coeff(0))) {
                    throw EvalError("negative power of zero constant term", to_string(node));
                }
                return pow(base, n.exponent);
            } else {  // CallNode
                Jet<T> arg = evaluate_jet(*n.arg, center, order);
                try {
                    switch (n.fn) {
                        case BuiltinFn::exp_fn: return exp(arg);
                        case BuiltinFn::log_fn: return log(arg);
                        case BuiltinFn::sin_fn: return sin(arg);
                        default: return cos(arg);
                    }
                } catch (const EvalError&) {
                    throw;
                } catch (const std::domain_error& e) {
                    throw EvalError(e.what(), to_string(node));
                }
            }
        },
        node.node);
}

template <ScalarType T>
T evaluate(const ExprNode& node, const T& x) {
    return evaluate_jet(node, x, 0).coeff(0);
}

inline bool depends_on_variable(const ExprNode& node) {
    return std::visit(
        [](const auto& n) -> bool {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, LiteralNode>) {
                return false;
            } else if constexpr (std::is_same_v<N, VariableNode>) {
                return true;
            } else if constexpr (std::is_same_v<N, NegateNode>) {
                return depends_on_variable(*n.operand);
            } else if constexpr (std::is_same_v<N, BinaryNode>) {
                return depends_on_variable(*n.lhs) || depends_on_variable(*n.rhs);
            } else if constexpr (std::is_same_v<N, PowerNode>) {
                return depends_on_variable(*n.base);
            } else {
                return depends_on_variable(*n.arg);
            }
        },
        node.node);
}

/// True when a finite domain radius cannot be inferred: the expression
/// divides by, takes a negative power of, or applies log to something that
/// depends on x. Everything else (polynomials, exp, sin, cos and their
/// combinations) is entire.
inline bool requires_explicit_radius(const ExprNode& node) {
    return std::visit(
        [](const auto& n) -> bool {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, LiteralNode> || std::is_same_v<N, VariableNode>) {
                return false;
            } else if constexpr (std::is_same_v<N, NegateNode>) {
                return requires_explicit_radius(*n.operand);
            } else if constexpr (std::is_same_v<N, BinaryNode>) {
                if (n.op == '/' && depends_on_variable(*n.rhs)) return true;
                return requires_explicit_radius(*n.lhs) || requires_explicit_radius(*n.rhs);
            } else if constexpr (std::is_same_v<N, PowerNode>) {
                if (n.exponent < 0 && depends_on_variable(*n.base)) return true;
                return requires_explicit_radius(*n.base);
            } else {
                if (n.fn == BuiltinFn::log_fn && depends_on_variable(*n.arg)) return true;
                return requires_explicit_radius(*n.arg);
            }
        },
        node.node);
}

/// Lowers an expression to an exact Polynomial. Throws std::domain_error for
/// anything outside the polynomial subset (function calls, division by or
/// negative powers of x-dependent subexpressions).
inline Polynomial to_polynomial(const ExprNode& node) {
    return std::visit(
        [&](const auto& n) -> Polynomial {
            using N = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<N, LiteralNode>) {
                return Polynomial{n.value};
            } else if constexpr (std::is_same_v<N, VariableNode>) {
                return Polynomial{Rational(0), Rational(1)};
            } else if constexpr (std::is_same_v<N, NegateNode>) {
                return -to_polynomial(*n.operand);
            } else if constexpr (std::is_same_v<N, BinaryNode>) {
                Polynomial lhs = to_polynomial(*n.lhs);
                Polynomial rhs = to_polynomial(*n.rhs);
                switch (n.op) {
                    case '+': return lhs + rhs;
                    case '-': return lhs - rhs;
                    case '*': return lhs * rhs;
                    default:
                        if (rhs.degree() > 0) {
                            throw std::domain_error("not a polynomial: division by '" +
                                                    to_string(*n.rhs) + "'");
                        }
                        if (rhs.is_zero()) throw std::domain_error("division by zero");
                        return (Rational(1) / rhs.coeff(0)) * lhs;
                }
            } else if constexpr (std::is_same_v<N, PowerNode>) {
                Polynomial base = to_polynomial(*n.base);
                long long exponent = n.exponent;
                if (exponent < 0) {
                    if (base.degree() > 0) {
                        throw std::domain_error("not a polynomial: negative power of '" +
                                                to_string(*n.base) + "'");
                    }
                    if (base.is_zero()) throw std::domain_error("negative power of zero");
                    return Polynomial{rational_pow(base.coeff(0), exponent)};
                }
                if (static_cast<long long>(std::max(base.degree(), 0)) * exponent > 100000) {
                    throw std::domain_error("polynomial power would have excessive degree");
                }
                Polynomial acc{Rational(1)};
                for (long long i = 0; i < exponent; ++i) acc = acc * base;
                return acc;
            } else {
                throw std::domain_error(std::string("not a polynomial: '") + builtin_name(n.fn) +
                                        "' is not allowed");
            }
        },
        node.node);
}

/// Parses the polynomial text format (a sum of c*x^m terms with rational c),
/// which is the polynomial subset of the expression grammar.
inline Polynomial parse_polynomial(std::string_view text) {
    return to_polynomial(*parse_expression(text));
}

/// Wraps an expression as a point function with a jet oracle. When no
/// radius is given it must be inferable (no 1/u or log(u) with u depending
/// on x).
template <ScalarType T>
PointFn<T> make_point_fn(ExprPtr expr, double radius = std::numeric_limits<double>::infinity()) {
    if (!expr) throw std::invalid_argument("null expression");
    if (std::isinf(radius) && requires_explicit_radius(*expr)) {
        throw std::domain_error("expression needs an explicit domain radius ('" + to_string(expr) +
                                "' has subexpressions with unknown singularities)");
    }
    if (!(radius > 0.0)) throw std::invalid_argument("domain radius must be positive");
    PointFn<T> f;
    f.radius = radius;
    f.evaluate = [expr](const T& x) { return evaluate(*expr, x); };
    f.jet_at = [expr](const T& center, int order) { return evaluate_jet(*expr, center, order); };
    return f;
}

}  // namespace qcalc
