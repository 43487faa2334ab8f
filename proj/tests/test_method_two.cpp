#include <doctest.h>

#include <random>

#include "wbu/atw.hpp"
#include "wbu/expr_io.hpp"
#include "wbu/method_two.hpp"

using namespace wbu;

namespace {
const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};
Series S(const std::string& s, const std::vector<std::string>& v = XYZ) { return Series(parse_poly(s, v)); }
std::vector<Polynomial> G(std::initializer_list<const char*> s, const std::vector<std::string>& v) {
  std::vector<Polynomial> out;
  for (const char* t : s) out.push_back(parse_poly(t, v));
  return out;
}

// Brute-force count of β in N^j with Δ(β) < 1.
long count_simplex(const PreInvariant& a) {
  long count = 0;
  MultiIndex b(a.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == a.size()) {
      count += delta(a, b) < 1;
      return;
    }
    for (int v = 0; v < 12; ++v) {
      b[i] = v;
      rec(i + 1);
    }
    b[i] = 0;
  };
  rec(0);
  return count;
}
}  // namespace

TEST_CASE("derivative ideals") {
  std::size_t touched = 0;
  auto D1 = derive_ideal({S("x^2-y^2*z")}, 1, {0, 1, 2}, touched);
  OrderInfo o = ideal_order(D1);
  CHECK(o.certain);
  CHECK(o.order == 1);
  CHECK(touched > 0);
  CHECK(ideal_order({S("x^2-y^2*z")}).order == 2);
  CHECK(ideal_order({Series(Polynomial(3), 4)}).certain == false);
  CHECK(ideal_order({Series(Polynomial(3))}).zero);
  auto [g, slot] = maximal_contact(D1, 0);
  CHECK(slot == 0);
  CHECK(g.body.coefficient({1, 0, 0}) != 0);
}

TEST_CASE("simplex indices") {
  auto s = simplex_indices({4});
  CHECK(s == std::vector<MultiIndex>{{0}, {1}, {2}, {3}});
  for (const PreInvariant& a : {PreInvariant{4, 5}, PreInvariant{2, 3, 3}, PreInvariant{4, Rational(16, 3)}}) {
    CHECK(static_cast<long>(simplex_indices(a).size()) == count_simplex(a));
    CHECK(simplex_size(a) == count_simplex(a));
  }
  CHECK(simplex_size({4, 5}) == 14);
}

TEST_CASE("bracket cache agrees between policies") {
  std::vector<Series> gens{S("x^3 + x*y^2*z + z^5 - y^4")};
  DBracket serial(gens, 3, kernels::Policy::Serial), parallel(gens, 3, kernels::Policy::Parallel);
  std::vector<MultiIndex> betas{{0}, {1}, {2}, {0, 1}, {1, 2}, {2, 3}};
  parallel.prefetch(betas);
  for (const auto& b : betas) {
    const auto& u = serial.get(b);
    const auto& v = parallel.get(b);
    REQUIRE(u.size() == v.size());
    for (std::size_t i = 0; i < u.size(); ++i) CHECK(u[i].body == v[i].body);
  }
  CHECK(serial.touched() == parallel.touched());
}

TEST_CASE("worked examples") {
  auto inv = [](std::initializer_list<const char*> s, const std::vector<std::string>& v) {
    return associated_centre_m2(v, G(s, v), PointQ(v.size(), 0)).centre.inv;
  };
  for (int m = 1; m <= 6; ++m) {
    std::string f = "x^2-y^" + std::to_string(m + 1);
    CHECK(inv({f.c_str()}, XY) == PreInvariant{2, m + 1});
  }
  CHECK(inv({"x^2-y^2*z"}, XYZ) == PreInvariant{2, 3, 3});
  CHECK(inv({"x^4+y^5+z^6"}, XYZ) == PreInvariant{4, 5, 6});
  CHECK(inv({"x^4+x*y^4+y^6"}, XY) == PreInvariant{4, Rational(16, 3)});
  CHECK(inv({"x^2", "y^3"}, XY) == PreInvariant{2, 3});
}

TEST_CASE("methods agree on random ideals") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> e(0, 2), c(-3, 3), nt(1, 4), ng(1, 2);
  int compared = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Polynomial> gens;
    for (int g = ng(rng); g > 0; --g) {
      Polynomial p(3);
      for (int t = nt(rng); t > 0; --t) {
        MultiIndex a{e(rng), e(rng), e(rng)};
        if (degree(a) > 0) p.add_term(a, c(rng));
      }
      gens.push_back(p);
    }
    bool nonzero = false;
    for (const auto& g : gens) nonzero = nonzero || !g.is_zero();
    if (!nonzero) continue;
    auto a = associated_centre_m1(XYZ, gens, {0, 0, 0}).centre.inv;
    auto b = associated_centre_m2(XYZ, gens, {0, 0, 0}, kernels::Policy::Serial).centre.inv;
    auto p = associated_centre_m2(XYZ, gens, {0, 0, 0}, kernels::Policy::Parallel).centre.inv;
    CHECK(a == b);
    CHECK(b == p);
    CHECK(gamma_member(b));
    ++compared;
  }
  CHECK(compared > 80);
}
