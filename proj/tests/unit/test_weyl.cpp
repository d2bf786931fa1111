#include <doctest.h>

#include "../support/oracle.hpp"
#include "../support/random_ops.hpp"
#include "logdmod/parser.hpp"
#include "logdmod/weyl.hpp"

using namespace logdmod;

namespace {

const std::vector<std::string> kX{"x"};
const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

WeylOp op(const std::string& s, const std::vector<std::string>& v = kXY) { return parse_operator(s, v); }
Poly poly(const std::string& s, const std::vector<std::string>& v = kXY) { return parse_polynomial(s, v); }

}  // namespace

TEST_CASE("normal ordered products") {
  CHECK(weyl_mul(op("dx"), op("x")) == op("x*dx + 1"));
  CHECK(weyl_mul(op("x*dx"), op("x*dx")) == op("x^2*dx^2 + x*dx"));
  WeylOp p = op("x^2*dy - 3*dx*dy + y");
  CHECK(weyl_mul(p, WeylOp::constant(2, 1)) == p);
  CHECK(weyl_mul(op("dy"), op("x")) == op("x*dy"));
  CHECK(op("dx^2*x") == op("x*dx^2 + 2*dx"));
  CHECK(op("x*dx").order() == 1);
  CHECK(WeylOp(2).order() == -1);
}

TEST_CASE("reference product sanity") {
  // The oracle has to see a difference the engine would hide.
  oracle::Op dx = oracle::from_weyl(op("dx")), x = oracle::from_weyl(op("x"));
  CHECK(oracle::mul(dx, x, 2) == oracle::from_weyl(op("x*dx + 1")));
  CHECK(oracle::mul(dx, x, 2) != oracle::from_weyl(op("x*dx")));
  CHECK(oracle::apply(oracle::from_weyl(op("x*dx")), oracle::from_poly(poly("x^3")), 2) ==
        oracle::from_poly(poly("3*x^3")));
}

TEST_CASE("transpose") {
  CHECK(transpose(op("dx")) == op("-dx"));
  CHECK(transpose(op("x*dx")) == op("-x*dx - 1"));
  CHECK(transpose(op("x*dx + y*dy - 2", kXYZ)) == op("-x*dx - y*dy - 4", kXYZ));
  CHECK(transpose(op("x^2")) == op("x^2"));
}

TEST_CASE("brackets") {
  CHECK(lie_bracket(op("dx"), op("x")) == op("1"));
  WeylOp d1 = op("x*dx + y*dy", kXYZ), d2 = op("x*z*dz + y*dz", kXYZ);
  CHECK(lie_bracket(d1, d2) == d2);
  CHECK(lie_bracket(d2, d2).is_zero());
}

TEST_CASE("principal symbols") {
  const std::vector<std::string> s2 = symbol_slot_names(kXY, PrintStyle::Parseable);
  CHECK(s2 == std::vector<std::string>{"x", "y", "xi", "eta"});
  CHECK(principal_symbol(op("x*dx + y*dy")) == parse_polynomial("x*xi + y*eta", s2));
  CHECK(principal_symbol(op("dx^2 + x^3")) == parse_polynomial("xi^2", s2));
  const std::vector<std::string> s3 = symbol_slot_names(kXYZ, PrintStyle::Parseable);
  CHECK(principal_symbol(op("x*z*dz + y*dz", kXYZ)) == parse_polynomial("(x*z + y)*zeta", s3));
  CHECK_THROWS(principal_symbol(WeylOp(2)));
}

TEST_CASE("action on polynomials") {
  CHECK(apply_to_poly(op("x*dx", kX), poly("x^3", kX)) == poly("3*x^3", kX));
  CHECK(apply_to_poly(op("dx*dy"), poly("x*y")) == poly("1"));
  Poly h = poly("x*y*(x+y)*(x*z+y)", kXYZ);
  CHECK(apply_to_poly(op("x*dx + y*dy", kXYZ), h) == poly("4", kXYZ) * h);
  CHECK(divergence(op("x^2*dx + x*y*dy")) == poly("3*x"));
}

TEST_CASE("meromorphic action") {
  Poly x = poly("x", kX);
  MeroElement inv(poly("1", kX), 1, x);
  MeroElement d = apply_to_meromorphic(op("dx", kX), inv);
  CHECK(d == MeroElement(poly("-1", kX), 2, x));
  CHECK(apply_to_meromorphic(op("x*dx + 1", kX), inv).is_zero());
  Poly h = poly("x*y*(x+y)*(x*z+y)", kXYZ);
  CHECK(apply_to_meromorphic(op("x*z*dz + y*dz + x", kXYZ), MeroElement(poly("1", kXYZ), 1, h)).is_zero());
  // pole order zero is the plain action
  testgen::Gen g(23);
  for (int i = 0; i < 100; ++i) {
    WeylOp p = g.op(2, 3, 2, 2);
    Poly q = g.poly(2, 3, 4), f = poly("x^2 - y^3");
    MeroElement m = apply_to_meromorphic(p, MeroElement(q, 0, f));
    CHECK(m == MeroElement(apply_to_poly(p, q), 0, f));
  }
}

TEST_CASE("jets") {
  CHECK(jet_apply(op("dx", kX), poly("x^2", kX), 1).is_zero());
  CHECK(jet_apply(op("dx", kX), poly("x^2", kX), 2) == poly("2*x", kX));
  Poly g = poly("1 + x + x^2*y + y^5");
  CHECK(jet_apply(op("1"), g, 3) == poly("1 + x"));
  CHECK(jet_apply(op("x*dx", kX), poly("x^3 + x^5", kX), 4) == poly("3*x^3", kX));
  CHECK_THROWS(jet_apply(op("1"), g, -1));

  // truncation soundness: order-1 operators see only the degree <= K part
  testgen::Gen gen(29);
  for (int i = 0; i < 200; ++i) {
    WeylOp p = gen.op(2, 3, 2, 1);
    Poly q = gen.poly(2, 5, 7);
    int k = gen.uniform(0, 5);
    CHECK(jet_apply(p, q, k) == truncate_degree(apply_to_poly(p, q), k));
    CHECK(jet_apply(p, q, k) == jet_apply(p, truncate_degree(q, k + 1), k));
  }
}

TEST_CASE("printing") {
  CHECK(to_string(op("x*dx + y*dy - 2"), kXY, PrintStyle::Display) == "x dx + y dy - 2");
  CHECK(to_string(op("3/2*x^2*dy"), kXY) == "3/2*x^2*dy");
  CHECK(weyl_slot_names(kXY) == std::vector<std::string>{"x", "y", "dx", "dy"});
}
