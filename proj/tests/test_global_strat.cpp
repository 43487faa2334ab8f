#include <doctest.h>

#include "wbu/errors.hpp"
#include "wbu/expr_io.hpp"
#include "wbu/global_strat.hpp"

#include <optional>

using namespace wbu;

namespace {
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};
std::vector<Polynomial> G(const std::string& s, const std::vector<std::string>& v = XYZ) { return {parse_poly(s, v)}; }
}  // namespace

TEST_CASE("maximal order") {
  CHECK(max_order(G("x^2-y^2*z")) == 2);
  CHECK(max_order(G("x^4+y^5+z^6")) == 4);
  CHECK(max_order(G("x+y^2", XY)) == 1);
  CHECK(max_order(G("x^2-y^3", XY)) == 2);
  CHECK_THROWS_AS(max_order(G("1")), MathError);
  CHECK_THROWS_AS(max_order(G("0")), MathError);
}

TEST_CASE("stratum ideals of the umbrella") {
  auto W = G("x^2-y^2*z");
  CHECK_FALSE(is_unit_ideal(stratum_ideal({2}, W, 3)));
  CHECK(is_unit_ideal(stratum_ideal({2}, W, 4)));
  auto e = global_next_entry({2}, W);
  REQUIRE(e);
  CHECK(*e == 3);
  CHECK_FALSE(global_next_entry({2, 3, 3}, W));
}

TEST_CASE("global maximum and pointwise values") {
  auto W = G("x^2-y^2*z");
  CHECK(global_maxinv(XYZ, W, {0, 0, 0}).maxinv == PreInvariant{2, 3, 3});
  CHECK(global_maxinv(XY, G("x^2-y^3", XY), {0, 0}).maxinv == PreInvariant{2, 3});
  CHECK(invariant_at_point(XYZ, W, {0, 0, 1}) == PreInvariant{2, 2});
  CHECK(invariant_at_point(XYZ, W, {0, 0, -2}) == PreInvariant{2, 2});
  CHECK(invariant_at_point(XYZ, W, {1, 1, 1}) == PreInvariant{1});
  CHECK(invariant_at_point(XYZ, W, {0, 0, 0}) == PreInvariant{2, 3, 3});
  // The global value dominates every sampled point.
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c) {
        if (a * a != b * b * c) continue;
        CHECK(compare_inv(invariant_at_point(XYZ, W, {a, b, c}), PreInvariant{2, 3, 3}) <= 0);
      }
}

TEST_CASE("global value equals the maximum over sampled points") {
  struct Case {
    std::vector<std::string> vars;
    const char* f;
  };
  for (const Case& c : {Case{XY, "x^2-y^3"}, Case{XY, "x^2-y^5"}, Case{XY, "x^4+x*y^4+y^6"}, Case{XYZ, "x^2-y^2*z"},
                        Case{XYZ, "x^4+y^5+z^6"}}) {
    auto gens = G(c.f, c.vars);
    const std::size_t n = c.vars.size();
    std::optional<PreInvariant> best;
    std::vector<int> idx(n, -2);
    for (;;) {
      PointQ p(idx.begin(), idx.end());
      if (gens[0].evaluate(p) == 0) {
        PreInvariant v = invariant_at_point(c.vars, gens, p);
        if (!best || compare_inv(v, *best) > 0) best = v;
      }
      std::size_t t = n;
      while (t > 0 && idx[t - 1] == 2) idx[--t] = -2;
      if (t == 0) break;
      ++idx[t - 1];
    }
    REQUIRE(best);
    CHECK(global_maxinv(c.vars, gens, PointQ(n, 0)).maxinv == *best);
  }
}
