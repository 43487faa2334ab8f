#include <doctest.h>

#include <random>

#include "wbu/errors.hpp"
#include "wbu/expr_io.hpp"

using namespace wbu;

namespace {
const std::vector<std::string> XY{"x", "y"};
}

TEST_CASE("operator precedence") {
  CHECK(parse_poly("-x^2", XY) == Polynomial::monomial({2, 0}, -1));
  CHECK(parse_poly("2^3^2", XY) == Polynomial::constant(2, 512));
  CHECK(parse_poly("x*y^2", XY) == Polynomial::monomial({1, 2}));
  CHECK(parse_poly("1/2*x - -y", XY) == Polynomial::monomial({1, 0}, Rational(1, 2)) + Polynomial::variable(2, 1));
  CHECK(parse_poly("(x+y)^2", XY).size() == 3);
  CHECK(parse_poly("  x  +  y ", XY) == parse_poly("x+y", XY));
}

TEST_CASE("malformed input reports a parse error") {
  CHECK_THROWS_AS(parse_poly("x^2+", XY), ParseError);
  CHECK_THROWS_AS(parse_poly("x + w", XY), ParseError);
  CHECK_THROWS_AS(parse_poly("x/y", XY), ParseError);
  CHECK_THROWS_AS(parse_poly("(x", XY), ParseError);
  CHECK_THROWS_AS(parse_poly("x^y", XY), ParseError);
  try {
    parse_poly("x + @", XY);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
}

TEST_CASE("variable lists and points") {
  CHECK(parse_var_list("x,y,z") == std::vector<std::string>{"x", "y", "z"});
  CHECK(parse_var_list("u1,v_2") == std::vector<std::string>{"u1", "v_2"});
  CHECK_THROWS_AS(parse_var_list("x,x"), ParseError);
  CHECK_THROWS_AS(parse_var_list("1x"), ParseError);
  CHECK(parse_point("0,1/2,-3", 3) == PointQ{0, Rational(1, 2), -3});
  CHECK_THROWS_AS(parse_point("0,1", 3), ParseError);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
}

TEST_CASE("render and parse round trip") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(0, 4), c(-7, 7), den(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial p(2);
    for (int t = 0; t < 5; ++t) p.add_term({e(rng), e(rng)}, Rational(c(rng)) / den(rng));
    CHECK(parse_poly(render(p, XY), XY) == p);
  }
  CHECK(render(Polynomial(2), XY) == "0");
}

TEST_CASE("big integers in JSON") {
  CHECK(big_to_json(BigInt(42)) == nlohmann::json(42));
  BigInt huge = BigInt(1) << 80;
  CHECK(big_to_json(huge) == nlohmann::json(huge.get_str()));
}

TEST_CASE("report document") {
  ReportDocument doc;
  doc.method = "2";
  doc.invariant = {2, 3};
  doc.weights = {3, 2};
  doc.marking = 6;
  doc.point = {0, 0};
  doc.extra["work"] = 7;
  nlohmann::json j = to_json(doc);
  CHECK(j["invariant"] == nlohmann::json({"2/1", "3/1"}));
  CHECK(j["weights"] == nlohmann::json({3, 2}));
  CHECK(j["marking"] == 6);
  CHECK(j["work"] == 7);
  CHECK(render_report(doc, true) == render_report(doc, true));
  CHECK(render_report(doc, false).find("invariant") != std::string::npos);
}

TEST_CASE("Newton picture carries its data in titles") {
  std::string svg = newton_svg({{4, 0}, {1, 4}, {0, 6}}, {4, Rational(16, 3)});
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("(1,4)") != std::string::npos);
  CHECK(svg.find("(4/1,16/3)") != std::string::npos);
}
