#include <doctest.h>

#include "../support/random_ops.hpp"
#include "logdmod/cli.hpp"
#include "logdmod/parser.hpp"

using namespace logdmod;

namespace {
const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};
}  // namespace

TEST_CASE("expressions") {
  Poly h = parse_polynomial("x*y*(x+y)*(x*z+y)", kXYZ);
  CHECK(h == parse_polynomial("x^3*y*z + x^2*y^2*z + x^2*y^2 + x*y^3", kXYZ));
  CHECK(parse_polynomial("x^2 - y^3", kXY).size() == 2);
  WeylOp d1 = parse_operator("x*dx + y*dy", kXYZ);
  CHECK(d1 == WeylOp::x(3, 0) * WeylOp::d(3, 0) + WeylOp::x(3, 1) * WeylOp::d(3, 1));
  CHECK(parse_polynomial("-(x - 1/2)*4/3", kXY) == parse_polynomial("2/3 - 4/3*x", kXY));
  CHECK(parse_polynomial("2^3", kXY) == Poly::constant(2, 8));
  CHECK(std::holds_alternative<Poly>(parse_expression("x^2 - y^3", kXY)));
  CHECK(std::holds_alternative<WeylOp>(parse_expression("x*dx", kXY)));
}

TEST_CASE("malformed expressions") {
  CHECK_THROWS_AS(parse_polynomial("x y", kXY), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x / y", kXY), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x / 0", kXY), ParseError);
  CHECK_THROWS_AS(parse_polynomial("w + 1", kXY), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x*dx", kXY), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x + 1", kXY), ParseError);
  CHECK_THROWS_AS(parse_polynomial("", kXY), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^-1", kXY), ParseError);
  try {
    parse_polynomial("x +\n  * y", kXY);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("variable lists") {
  CHECK(parse_variable_list("x, y ,z") == kXYZ);
  CHECK_THROWS(parse_variable_list("x,x"));
  CHECK_THROWS(parse_variable_list("y,dy"));
  CHECK(parse_variable_list("x,dy").size() == 2);  // no y, so dy is an ordinary name
  CHECK_THROWS(parse_variable_list("1a"));
}

TEST_CASE("printer output parses back") {
  testgen::Gen g(43);
  int cases = 0;
  for (int i = 0; i < 500; ++i) {
    int n = g.uniform(1, 3);
    std::vector<std::string> vars = default_variable_names(n);
    Poly p = g.poly(n, 5, 6);
    CHECK(parse_polynomial(to_string(p, vars), vars) == p);
    WeylOp q = g.op(n, 5, 4, 3);
    CHECK(parse_operator(to_string(q, vars), vars) == q);
    cases += 2;
  }
  // more than three variables use indexed names
  std::vector<std::string> v5 = default_variable_names(5);
  CHECK(v5.front() == "x1");
  for (int i = 0; i < 20; ++i) {
    WeylOp q = g.op(5, 4, 3, 2);
    CHECK(parse_operator(to_string(q, v5), v5) == q);
  }
  CHECK(cases == 1000);
}
