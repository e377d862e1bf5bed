#include "expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <utility>

namespace abcalc::expr {
namespace {

NodePtr make_node(Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

NodePtr make_const(Complex c) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Const;
    n->value = c;
    return n;
}

bool is_const(const NodePtr& n, Complex v) { return n->kind == Kind::Const && n->value == v; }

// Folding constructors used by derivative(); parse() builds raw nodes.
NodePtr add(NodePtr a, NodePtr b) {
    if (is_const(a, 0.0)) return b;
    if (is_const(b, 0.0)) return a;
    if (a->kind == Kind::Const && b->kind == Kind::Const) return make_const(a->value + b->value);
    return make_node(Kind::Add, std::move(a), std::move(b));
}

NodePtr sub(NodePtr a, NodePtr b) {
    if (is_const(b, 0.0)) return a;
    if (a->kind == Kind::Const && b->kind == Kind::Const) return make_const(a->value - b->value);
    return make_node(Kind::Sub, std::move(a), std::move(b));
}

NodePtr mul(NodePtr a, NodePtr b) {
    if (is_const(a, 0.0) || is_const(b, 0.0)) return make_const(0.0);
    if (is_const(a, 1.0)) return b;
    if (is_const(b, 1.0)) return a;
    if (a->kind == Kind::Const && b->kind == Kind::Const) return make_const(a->value * b->value);
    // keep constants on the left so they fold with each other
    if (b->kind == Kind::Const) std::swap(a, b);
    if (a->kind == Kind::Const && b->kind == Kind::Mul && b->lhs->kind == Kind::Const) {
        return mul(make_const(a->value * b->lhs->value), b->rhs);
    }
    return make_node(Kind::Mul, std::move(a), std::move(b));
}

NodePtr div(NodePtr a, NodePtr b) {
    if (is_const(a, 0.0)) return make_const(0.0);
    if (is_const(b, 1.0)) return a;
    return make_node(Kind::Div, std::move(a), std::move(b));
}

NodePtr ipow(NodePtr base, long n) {
    if (n == 0) return make_const(1.0);
    if (n == 1) return base;
    auto node = std::make_shared<Node>();
    node->kind = Kind::IntPow;
    node->exponent = n;
    node->lhs = std::move(base);
    return node;
}

NodePtr cpow(NodePtr base, Complex alpha) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Pow;
    node->value = alpha;
    node->lhs = std::move(base);
    return node;
}

Complex int_power(Complex base, long n) {
    if (n < 0) {
        if (base == Complex{}) throw Error(ErrorCode::EvalDomainError, "division by zero in integer power");
        return 1.0 / int_power(base, -n);
    }
    Complex result{1.0, 0.0};
    Complex b = base;
    auto e = static_cast<unsigned long>(n);
    while (e) {
        if (e & 1UL) result *= b;
        b *= b;
        e >>= 1UL;
    }
    return result;
}

Complex principal_pow(Complex base, Complex alpha) {
    if (base == Complex{}) {
        if (alpha.real() > 0.0) return {};
        throw Error(ErrorCode::EvalDomainError, "0 raised to a power with non-positive real part");
    }
    // integer exponents are single-valued: multiply exactly instead of exp∘log
    if (alpha.imag() == 0.0 && alpha.real() == std::trunc(alpha.real()) && std::abs(alpha.real()) <= 64.0)
        return int_power(base, static_cast<long>(alpha.real()));
    if (base.imag() == 0.0) base = Complex(base.real(), 0.0);  // -0 → +0: arg ∈ (-π, π]
    return std::exp(alpha * std::log(base));
}

// Anchor: a point a with the exact offset z - a, used for subtrees z - a.
struct Anchor {
    Complex point;
    Complex offset;
};

Complex eval_node(const Node& n, Complex z, const Anchor* anchor) {
    auto ev = [&](const NodePtr& c) { return eval_node(*c, z, anchor); };
    switch (n.kind) {
        case Kind::Const: return n.value;
        case Kind::Var: return z;
        case Kind::Add: return ev(n.lhs) + ev(n.rhs);
        case Kind::Sub:
            if (anchor && n.lhs->kind == Kind::Var && n.rhs->kind == Kind::Const && n.rhs->value == anchor->point)
                return anchor->offset;
            return ev(n.lhs) - ev(n.rhs);
        case Kind::Mul: return ev(n.lhs) * ev(n.rhs);
        case Kind::Div: {
            const Complex d = ev(n.rhs);
            if (d == Complex{}) throw Error(ErrorCode::EvalDomainError, "division by zero");
            return ev(n.lhs) / d;
        }
        case Kind::IntPow: return int_power(ev(n.lhs), n.exponent);
        case Kind::Pow: return principal_pow(ev(n.lhs), n.value);
        case Kind::Exp: return std::exp(ev(n.lhs));
        case Kind::Sin: return std::sin(ev(n.lhs));
        case Kind::Cos: return std::cos(ev(n.lhs));
    }
    return {};
}

NodePtr derive(const NodePtr& n) {
    switch (n->kind) {
        case Kind::Const: return make_const(0.0);
        case Kind::Var: return make_const(1.0);
        case Kind::Add: return add(derive(n->lhs), derive(n->rhs));
        case Kind::Sub: return sub(derive(n->lhs), derive(n->rhs));
        case Kind::Mul: return add(mul(derive(n->lhs), n->rhs), mul(n->lhs, derive(n->rhs)));
        case Kind::Div:
            // (a/b)' = a'/b - a b' / b²
            return sub(div(derive(n->lhs), n->rhs), div(mul(n->lhs, derive(n->rhs)), ipow(n->rhs, 2)));
        case Kind::IntPow:
            return mul(mul(make_const(static_cast<double>(n->exponent)), ipow(n->lhs, n->exponent - 1)),
                       derive(n->lhs));
        case Kind::Pow: {
            const Complex a1 = n->value - 1.0;
            NodePtr p = (a1 == Complex{}) ? make_const(1.0) : cpow(n->lhs, a1);
            return mul(mul(make_const(n->value), p), derive(n->lhs));
        }
        case Kind::Exp: return mul(n, derive(n->lhs));
        case Kind::Sin: return mul(make_node(Kind::Cos, n->lhs), derive(n->lhs));
        case Kind::Cos: return mul(mul(make_const(-1.0), make_node(Kind::Sin, n->lhs)), derive(n->lhs));
    }
    return make_const(0.0);
}

bool equal_nodes(const Node& a, const Node& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Kind::Const: return a.value == b.value;
        case Kind::Var: return true;
        case Kind::IntPow: return a.exponent == b.exponent && equal_nodes(*a.lhs, *b.lhs);
        case Kind::Pow: return a.value == b.value && equal_nodes(*a.lhs, *b.lhs);
        case Kind::Exp:
        case Kind::Sin:
        case Kind::Cos: return equal_nodes(*a.lhs, *b.lhs);
        default: return equal_nodes(*a.lhs, *b.lhs) && equal_nodes(*a.rhs, *b.rhs);
    }
}

std::string format_real(double v) {
    if (v == 0.0) return "0";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

void print_node(const Node& n, std::string& out) {
    auto binary = [&](const char* op) {
        out += '(';
        print_node(*n.lhs, out);
        out += op;
        print_node(*n.rhs, out);
        out += ')';
    };
    auto call = [&](const char* name) {
        out += name;
        out += '(';
        print_node(*n.lhs, out);
        out += ')';
    };
    switch (n.kind) {
        case Kind::Const: out += format_complex(n.value); break;
        case Kind::Var: out += 'z'; break;
        case Kind::Add: binary(" + "); break;
        case Kind::Sub: binary(" - "); break;
        case Kind::Mul: binary(" * "); break;
        case Kind::Div: binary(" / "); break;
        case Kind::IntPow:
            if (n.lhs->kind == Kind::IntPow) {
                out += '(';
                print_node(*n.lhs, out);
                out += ')';
            } else {
                print_node(*n.lhs, out);
            }
            out += '^';
            out += std::to_string(n.exponent);
            break;
        case Kind::Pow:
            out += "pow(";
            print_node(*n.lhs, out);
            out += ", ";
            out += format_complex(n.value);
            out += ')';
            break;
        case Kind::Exp: call("exp"); break;
        case Kind::Sin: call("sin"); break;
        case Kind::Cos: call("cos"); break;
    }
}

// Recursive-descent parser over the expression grammar. Positions are
// 0-based internally and reported 1-based.
class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    NodePtr parse_all() {
        NodePtr e = parse_expr();
        skip_ws();
        if (pos_ < src_.size()) fail("unexpected character '" + std::string(1, src_[pos_]) + "'");
        return e;
    }

    struct Failure {
        std::size_t pos;
        std::string message;
    };

private:
    [[noreturn]] void fail(const std::string& msg) { throw Failure{pos_, msg}; }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ >= src_.size()) fail(std::string("expected '") + c + "' but input ended");
            fail(std::string("expected '") + c + "'");
        }
    }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        for (;;) {
            if (accept('+')) {
                lhs = make_node(Kind::Add, lhs, parse_term());
            } else if (accept('-')) {
                lhs = make_node(Kind::Sub, lhs, parse_term());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_factor();
        for (;;) {
            if (accept('*')) {
                lhs = make_node(Kind::Mul, lhs, parse_factor());
            } else if (accept('/')) {
                lhs = make_node(Kind::Div, lhs, parse_factor());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_factor() {
        NodePtr base = parse_atom();
        if (accept('^')) {
            skip_ws();
            const long n = parse_integer();
            auto node = std::make_shared<Node>();
            node->kind = Kind::IntPow;
            node->exponent = n;
            node->lhs = base;
            return node;
        }
        return base;
    }

    long parse_integer() {
        const std::size_t start = pos_;
        if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = digits;
            fail("expected an integer exponent");
        }
        long v = 0;
        std::string_view text = src_.substr(start, pos_ - start);
        if (text.front() == '+') text.remove_prefix(1);
        auto res = std::from_chars(text.data(), text.data() + text.size(), v);
        if (res.ec != std::errc{}) {
            pos_ = start;
            fail("integer exponent out of range");
        }
        return v;
    }

    bool starts_number() {
        skip_ws();
        if (pos_ >= src_.size()) return false;
        std::size_t p = pos_;
        if (src_[p] == '-' || src_[p] == '+') ++p;
        if (p >= src_.size()) return false;
        if (std::isdigit(static_cast<unsigned char>(src_[p]))) return true;
        return src_[p] == '.' && p + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p + 1]));
    }

    // [+-]? digits [. digits] [e[+-]digits]
    double parse_real() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) ++pos_;
        const std::size_t mant = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        }
        if (pos_ == mant || (pos_ == mant + 1 && src_[mant] == '.')) {
            pos_ = start;
            fail("expected a number");
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < src_.size() && (src_[p] == '-' || src_[p] == '+')) ++p;
            if (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) {
                pos_ = p;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            }
        }
        std::string_view text = src_.substr(start, pos_ - start);
        if (text.front() == '+') text.remove_prefix(1);
        double v = 0.0;
        auto res = std::from_chars(text.data(), text.data() + text.size(), v);
        if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
            pos_ = start;
            fail("malformed number");
        }
        return v;
    }

    // number "i"?
    Complex parse_number_literal() {
        const double v = parse_real();
        if (pos_ < src_.size() && src_[pos_] == 'i') {
            ++pos_;
            return {0.0, v};
        }
        return {v, 0.0};
    }

    // "(" number ("+"|"-") number "i" ")"; restores position and returns
    // nullopt when the text is not of this form.
    std::optional<Complex> try_paren_complex() {
        const std::size_t save = pos_;
        try {
            expect('(');
            if (!starts_number()) throw Failure{pos_, ""};
            const double re = parse_real();
            if (pos_ < src_.size() && src_[pos_] == 'i') throw Failure{pos_, ""};
            double sign = 1.0;
            if (accept('+')) {
                sign = 1.0;
            } else if (accept('-')) {
                sign = -1.0;
            } else {
                throw Failure{pos_, ""};
            }
            skip_ws();
            if (!starts_number() || src_[pos_] == '-' || src_[pos_] == '+') throw Failure{pos_, ""};
            const double im = parse_real();
            if (!(pos_ < src_.size() && src_[pos_] == 'i')) throw Failure{pos_, ""};
            ++pos_;
            expect(')');
            return Complex{re, sign * im};
        } catch (const Failure&) {
            pos_ = save;
            return std::nullopt;
        }
    }

    Complex parse_complexnum() {
        skip_ws();
        if (peek('(')) {
            if (auto c = try_paren_complex()) return *c;
            ++pos_;
            fail("expected a complex literal of the form (a+bi)");
        }
        if (!starts_number()) {
            if (pos_ >= src_.size()) fail("expected a number but input ended");
            fail("expected a number");
        }
        return parse_number_literal();
    }

    NodePtr parse_atom() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        const char ch = src_[pos_];
        if (ch == '(') {
            if (auto c = try_paren_complex()) return make_const(*c);
            ++pos_;
            NodePtr e = parse_expr();
            expect(')');
            return e;
        }
        if (starts_number()) return make_const(parse_number_literal());
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            const std::size_t start = pos_;
            while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            const std::string_view name = src_.substr(start, pos_ - start);
            if (name == "z") return make_node(Kind::Var);
            Kind k{};
            if (name == "pow") {
                expect('(');
                NodePtr base = parse_expr();
                expect(',');
                const Complex alpha = parse_complexnum();
                expect(')');
                return cpow(base, alpha);
            }
            if (name == "exp") {
                k = Kind::Exp;
            } else if (name == "sin") {
                k = Kind::Sin;
            } else if (name == "cos") {
                k = Kind::Cos;
            } else {
                pos_ = start;
                fail("unknown identifier '" + std::string(name) + "'");
            }
            expect('(');
            NodePtr arg = parse_expr();
            expect(')');
            return make_node(k, arg);
        }
        fail("unexpected character '" + std::string(1, ch) + "'");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace

FunctionExpr::FunctionExpr() : root_(make_const(0.0)) {}
FunctionExpr::FunctionExpr(NodePtr root) : root_(std::move(root)) {
    if (!root_) root_ = make_const(0.0);
}

FunctionExpr FunctionExpr::constant(Complex c) { return FunctionExpr(make_const(c)); }
FunctionExpr FunctionExpr::variable() { return FunctionExpr(make_node(Kind::Var)); }

Complex FunctionExpr::eval(Complex z) const { return eval_node(*root_, z, nullptr); }

Complex FunctionExpr::eval_near(Complex anchor, Complex z, Complex offset) const {
    const Anchor a{anchor, offset};
    return eval_node(*root_, z, &a);
}

FunctionExpr FunctionExpr::derivative() const { return FunctionExpr(derive(root_)); }

std::string FunctionExpr::to_string() const {
    std::string out;
    print_node(*root_, out);
    return out;
}

std::optional<ExponentialForm> FunctionExpr::as_exponential() const {
    auto rate_of = [](const Node& e) -> std::optional<Complex> {
        if (e.kind != Kind::Exp) return std::nullopt;
        const Node& a = *e.lhs;
        if (a.kind == Kind::Var) return Complex{1.0, 0.0};
        if (a.kind == Kind::Mul) {
            if (a.lhs->kind == Kind::Const && a.rhs->kind == Kind::Var) return a.lhs->value;
            if (a.rhs->kind == Kind::Const && a.lhs->kind == Kind::Var) return a.rhs->value;
        }
        return std::nullopt;
    };
    const Node& r = *root_;
    if (auto a = rate_of(r)) return ExponentialForm{{1.0, 0.0}, *a};
    if (r.kind == Kind::Mul) {
        if (r.lhs->kind == Kind::Const) {
            if (auto a = rate_of(*r.rhs)) return ExponentialForm{r.lhs->value, *a};
        }
        if (r.rhs->kind == Kind::Const) {
            if (auto a = rate_of(*r.lhs)) return ExponentialForm{r.rhs->value, *a};
        }
    }
    return std::nullopt;
}

bool operator==(const FunctionExpr& a, const FunctionExpr& b) { return equal_nodes(*a.root_, *b.root_); }

FunctionExpr operator+(const FunctionExpr& a, const FunctionExpr& b) {
    return FunctionExpr(make_node(Kind::Add, a.root_, b.root_));
}
FunctionExpr operator-(const FunctionExpr& a, const FunctionExpr& b) {
    return FunctionExpr(make_node(Kind::Sub, a.root_, b.root_));
}
FunctionExpr operator*(const FunctionExpr& a, const FunctionExpr& b) {
    return FunctionExpr(make_node(Kind::Mul, a.root_, b.root_));
}
FunctionExpr operator/(const FunctionExpr& a, const FunctionExpr& b) {
    return FunctionExpr(make_node(Kind::Div, a.root_, b.root_));
}

FunctionExpr int_pow(const FunctionExpr& base, long n) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::IntPow;
    node->exponent = n;
    node->lhs = base.root_ptr();
    return FunctionExpr(node);
}
FunctionExpr pow(const FunctionExpr& base, Complex alpha) { return FunctionExpr(cpow(base.root_ptr(), alpha)); }
FunctionExpr exp(const FunctionExpr& arg) { return FunctionExpr(make_node(Kind::Exp, arg.root_ptr())); }
FunctionExpr sin(const FunctionExpr& arg) { return FunctionExpr(make_node(Kind::Sin, arg.root_ptr())); }
FunctionExpr cos(const FunctionExpr& arg) { return FunctionExpr(make_node(Kind::Cos, arg.root_ptr())); }

FunctionExpr power_function(Complex c, Complex alpha) {
    return pow(FunctionExpr::variable() - FunctionExpr::constant(c), alpha);
}

FunctionExpr exponential_function(Complex a) { return exp(FunctionExpr::constant(a) * FunctionExpr::variable()); }

std::variant<FunctionExpr, ParseError> try_parse(std::string_view src) {
    Parser p(src);
    try {
        return FunctionExpr(p.parse_all());
    } catch (const Parser::Failure& f) {
        return ParseError{f.pos + 1, f.message};
    }
}

FunctionExpr parse(std::string_view src) {
    auto r = try_parse(src);
    if (auto* err = std::get_if<ParseError>(&r)) {
        throw Error(ErrorCode::ParseError, "parse error at position " + std::to_string(err->position) + ": " +
                                               err->message);
    }
    return std::get<FunctionExpr>(std::move(r));
}

std::string format_complex(Complex v) {
    const double re = v.real();
    const double im = v.imag();
    if (im == 0.0) return format_real(re);
    const std::string mag = format_real(std::abs(im));
    return "(" + format_real(re) + (std::signbit(im) ? "-" : "+") + mag + "i)";
}

}  // namespace abcalc::expr
