#include "radheat/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <stdexcept>
#include <vector>

namespace radheat {

namespace {

struct Node {
    enum class Op { constant, variable, add, sub, mul, div, pow, neg, call } op;
    double value = 0.0;
    double (*fn)(double) = nullptr;
    std::unique_ptr<Node> lhs, rhs;

    double eval(double x) const {
        switch (op) {
        case Op::constant: return value;
        case Op::variable: return x;
        case Op::add: return lhs->eval(x) + rhs->eval(x);
        case Op::sub: return lhs->eval(x) - rhs->eval(x);
        case Op::mul: return lhs->eval(x) * rhs->eval(x);
        case Op::div: return lhs->eval(x) / rhs->eval(x);
        case Op::pow: return std::pow(lhs->eval(x), rhs->eval(x));
        case Op::neg: return -lhs->eval(x);
        case Op::call: return fn(lhs->eval(x));
        }
        return 0.0;
    }
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Op op, NodePtr l = nullptr, NodePtr r = nullptr) {
    auto n = std::make_unique<Node>();
    n->op = op;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
}

NodePtr make_const(double v) {
    auto n = make(Node::Op::constant);
    n->value = v;
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodePtr parse() {
        NodePtr e = expression();
        skip_ws();
        if (pos_ != s_.size())
            fail("trailing characters");
        return e;
    }

private:
    NodePtr expression() {
        NodePtr lhs = term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                lhs = make(Node::Op::add, std::move(lhs), term());
            else if (accept('-'))
                lhs = make(Node::Op::sub, std::move(lhs), term());
            else
                return lhs;
        }
    }

    NodePtr term() {
        NodePtr lhs = unary();
        for (;;) {
            skip_ws();
            if (accept('*'))
                lhs = make(Node::Op::mul, std::move(lhs), unary());
            else if (accept('/'))
                lhs = make(Node::Op::div, std::move(lhs), unary());
            else
                return lhs;
        }
    }

    NodePtr unary() {
        skip_ws();
        if (accept('-')) return make(Node::Op::neg, unary());
        if (accept('+')) return unary();
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        skip_ws();
        if (accept('^'))
            return make(Node::Op::pow, std::move(base), unary()); // right-assoc
        return base;
    }

    NodePtr primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            char* end = nullptr;
            const double v = std::strtod(s_.c_str() + pos_, &end);
            if (end == s_.c_str() + pos_) fail("bad number");
            pos_ = static_cast<std::size_t>(end - s_.c_str());
            return make_const(v);
        }
        if (accept('(')) {
            NodePtr e = expression();
            skip_ws();
            if (!accept(')')) fail("missing ')'");
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < s_.size() &&
                   std::isalpha(static_cast<unsigned char>(s_[pos_])))
                name += s_[pos_++];
            if (name == "x") return make(Node::Op::variable);
            if (name == "pi") return make_const(M_PI);
            double (*fn)(double) = nullptr;
            if (name == "sin") fn = std::sin;
            else if (name == "cos") fn = std::cos;
            else if (name == "tan") fn = std::tan;
            else if (name == "exp") fn = std::exp;
            else if (name == "log") fn = std::log;
            else if (name == "sqrt") fn = std::sqrt;
            else if (name == "abs") fn = std::fabs;
            else fail("unknown identifier '" + name + "'");
            skip_ws();
            if (!accept('(')) fail("expected '(' after function name");
            NodePtr arg = expression();
            skip_ws();
            if (!accept(')')) fail("missing ')'");
            NodePtr call = make(Node::Op::call, std::move(arg));
            call->fn = fn;
            return call;
        }
        fail(std::string("unexpected character '") + c + "'");
        return nullptr;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse_expression: " + what + " at position " +
                                    std::to_string(pos_));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

std::function<double(double)> parse_expression(const std::string& text) {
    auto root = std::make_shared<NodePtr>(Parser(text).parse());
    return [root](double x) { return (*root)->eval(x); };
}

} // namespace radheat
