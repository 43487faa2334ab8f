#include <doctest.h>

#include <random>

#include "wbu/expr_io.hpp"
#include "wbu/newton.hpp"

using namespace wbu;

namespace {
const std::vector<std::string> XY{"x", "y"};
Series S(const std::string& s) { return Series(parse_poly(s, XY)); }
}  // namespace

TEST_CASE("antichain keeps the minimal points") {
  auto a = antichain({{4, 0}, {5, 1}, {1, 4}, {0, 6}, {1, 5}, {4, 0}});
  CHECK(a == std::vector<MultiIndex>{{4, 0}, {1, 4}, {0, 6}});
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(0, 6);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<MultiIndex> pts;
    for (int i = 0; i < 15; ++i) pts.push_back({d(rng), d(rng), d(rng)});
    auto m = antichain(pts);
    for (const auto& p : pts) {
      bool dominated = false;
      for (const auto& q : m) dominated = dominated || divides(q, p);
      CHECK(dominated);
    }
    for (const auto& p : m)
      for (const auto& q : m)
        if (p != q) CHECK_FALSE(divides(p, q));
  }
}

TEST_CASE("Newton set of the plane curve") {
  NewtonSet N = newton_set({S("x^4+x*y^4+y^6")}, 2);
  CHECK(N.minimal == std::vector<MultiIndex>{{4, 0}, {1, 4}, {0, 6}});
  CHECK(N.certified_degree == Series::kExact);
  auto w = min_xi_over_newton({4}, N);
  REQUIRE(w);
  CHECK(w->value == Rational(16, 3));
  CHECK(w->beta == MultiIndex{1, 4});
  CHECK(hyperplane_below({4, Rational(16, 3)}, N));
  CHECK_FALSE(hyperplane_below({4, 6}, N));
}

TEST_CASE("Newton set sees every generator") {
  NewtonSet N = newton_set({S("x^2"), S("x*y + y^3")}, 2);
  CHECK(N.minimal == std::vector<MultiIndex>{{1, 1}, {2, 0}, {0, 3}});
  NewtonSet T = newton_set({Series(parse_poly("x^2 + y^9", XY), 5)}, 2);
  CHECK(T.certified_degree == 5);
}
