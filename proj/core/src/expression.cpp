#include "griemlab/expression.hpp"

#include "griemlab/error.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

namespace griemlab {

enum class Op { constant, coordinate, add, sub, mul, div, neg, pow, sin, cos, tan, exp, log, sqrt, tanh };

struct Expression::Node {
  Op op = Op::constant;
  double constant = 0.0;
  std::size_t index = 0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;

NodePtr leaf(double c) {
  auto n = std::make_shared<Expression::Node>();
  n->constant = c;
  return n;
}

NodePtr make(Op op, NodePtr a, NodePtr b = nullptr) {
  auto n = std::make_shared<Expression::Node>();
  n->op = op;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

struct Function {
  std::string_view name;
  Op op;
  int arity;
};

constexpr Function kFunctions[] = {
    {"sin", Op::sin, 1},   {"cos", Op::cos, 1},   {"tan", Op::tan, 1},   {"exp", Op::exp, 1},
    {"log", Op::log, 1},   {"sqrt", Op::sqrt, 1}, {"tanh", Op::tanh, 1}, {"pow", Op::pow, 2},
};

class Parser {
 public:
  Parser(std::string_view src, std::span<const std::string> names) : src_(src), names_(names) {}

  NodePtr run() {
    NodePtr e = expr();
    skip();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression '" + std::string(src_) + "' at position " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) lhs = make(Op::add, lhs, term());
      else if (accept('-')) lhs = make(Op::sub, lhs, term());
      else return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) lhs = make(Op::mul, lhs, unary());
      else if (accept('/')) lhs = make(Op::div, lhs, unary());
      else return lhs;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Op::neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make(Op::pow, base, unary());
    return base;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return named();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    double v = 0.0;
    const char* begin = src_.data() + pos_;
    const char* end = src_.data() + src_.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc()) fail("malformed number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return leaf(v);
  }

  NodePtr named() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);
    skip();
    if (pos_ < src_.size() && src_[pos_] == '(') {
      for (const auto& f : kFunctions) {
        if (f.name != name) continue;
        ++pos_;
        NodePtr a = expr();
        NodePtr b;
        if (f.arity == 2) {
          expect(',');
          b = expr();
        }
        expect(')');
        return make(f.op, a, b);
      }
      pos_ = start;
      fail("unknown function '" + std::string(name) + "'");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) {
        auto n = std::make_shared<Expression::Node>();
        n->op = Op::coordinate;
        n->index = i;
        return n;
      }
    }
    if (name == "pi") return leaf(std::numbers::pi);
    pos_ = start;
    fail("unknown name '" + std::string(name) + "'");
  }

  std::string_view src_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

template <class T>
T eval(const Expression::Node& n, std::span<const T> x) {
  using std::cos, std::exp, std::log, std::pow, std::sin, std::sqrt, std::tan, std::tanh;
  switch (n.op) {
    case Op::constant: return T(n.constant);
    case Op::coordinate: return x[n.index];
    case Op::add: return eval(*n.lhs, x) + eval(*n.rhs, x);
    case Op::sub: return eval(*n.lhs, x) - eval(*n.rhs, x);
    case Op::mul: return eval(*n.lhs, x) * eval(*n.rhs, x);
    case Op::div: return eval(*n.lhs, x) / eval(*n.rhs, x);
    case Op::neg: return -eval(*n.lhs, x);
    case Op::pow: return pow(eval(*n.lhs, x), eval(*n.rhs, x));
    case Op::sin: return sin(eval(*n.lhs, x));
    case Op::cos: return cos(eval(*n.lhs, x));
    case Op::tan: return tan(eval(*n.lhs, x));
    case Op::exp: return exp(eval(*n.lhs, x));
    case Op::log: return log(eval(*n.lhs, x));
    case Op::sqrt: return sqrt(eval(*n.lhs, x));
    case Op::tanh: return tanh(eval(*n.lhs, x));
  }
  return T(0.0);
}

}  // namespace

std::vector<std::string> default_coordinate_names(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= dim; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

Expression Expression::parse(std::string_view source, std::span<const std::string> coordinate_names) {
  Expression e;
  e.source_ = std::string(source);
  e.root_ = Parser(e.source_, coordinate_names).run();
  return e;
}

Expression Expression::parse(std::string_view source, std::size_t dim) {
  const auto names = default_coordinate_names(dim);
  return parse(source, names);
}

Jet Expression::evaluate(std::span<const Jet> x) const { return eval<Jet>(*root_, x); }

double Expression::evaluate(std::span<const double> x) const { return eval<double>(*root_, x); }

}  // namespace griemlab
