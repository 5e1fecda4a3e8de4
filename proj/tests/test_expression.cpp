#include "griemlab/error.hpp"
#include "griemlab/expression.hpp"

#include <doctest.h>

#include <cmath>

using namespace griemlab;

namespace {
double eval(const char* src, std::vector<double> x = {0.5, -1.25, 2.0}) {
  return Expression::parse(src, x.size()).evaluate(std::span<const double>(x));
}
}  // namespace

TEST_CASE("precedence and associativity") {
  CHECK(eval("1 + 2 * 3") == 7.0);
  CHECK(eval("(1 + 2) * 3") == 9.0);
  CHECK(eval("2 ^ 3 ^ 2") == 512.0);
  CHECK(eval("-2 ^ 2") == -4.0);
  CHECK(eval("8 / 4 / 2") == 1.0);
  CHECK(eval("1 - 2 - 3") == -4.0);
  CHECK(eval("+3 * -x1") == -1.5);
  CHECK(eval("2.5e-1 * 4") == 1.0);
}

TEST_CASE("coordinates, constants and functions") {
  CHECK(eval("x1 * x2 + x3") == doctest::Approx(0.5 * -1.25 + 2.0));
  CHECK(eval("sin(pi / 2)") == doctest::Approx(1.0));
  CHECK(eval("pow(x3, 3)") == doctest::Approx(8.0));
  CHECK(eval("exp(log(x3))") == doctest::Approx(2.0));
  CHECK(eval("sqrt(x3) * sqrt(x3)") == doctest::Approx(2.0));
  CHECK(eval("tanh(0) + cos(0) + tan(0)") == 1.0);
}

TEST_CASE("gradients through the jet evaluator") {
  const Expression e = Expression::parse("x1^2 * sin(x2) + exp(x1 * x3)", 3);
  std::vector<Jet> x{Jet::variable(0.5, 0), Jet::variable(-1.25, 1), Jet::variable(2.0, 2)};
  const Jet r = e.evaluate(std::span<const Jet>(x));
  CHECK(r.grad[0] == doctest::Approx(2 * 0.5 * std::sin(-1.25) + 2.0 * std::exp(1.0)));
  CHECK(r.grad[1] == doctest::Approx(0.25 * std::cos(-1.25)));
  CHECK(r.grad[2] == doctest::Approx(0.5 * std::exp(1.0)));
}

TEST_CASE("custom coordinate names") {
  const std::vector<std::string> names{"x", "y", "z"};
  const Expression e = Expression::parse("x * y - z", names);
  const std::vector<double> v{2.0, 3.0, 1.0};
  CHECK(e.evaluate(std::span<const double>(v)) == 5.0);
  CHECK(default_coordinate_names(2) == std::vector<std::string>{"x1", "x2"});
}

TEST_CASE("malformed input reports a parse error") {
  for (const char* bad : {"", "1 +", "(1", "1)", "x4", "foo(1)", "sin()", "pow(1)", "1 ** 2", "2 $ 3", "x1 x2", "1e"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Expression::parse(bad, 3), ParseError);
  }
}

TEST_CASE("error message carries the position") {
  try {
    Expression::parse("x1 + * 2", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find('5') != std::string::npos);
  }
}
