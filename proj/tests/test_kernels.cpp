#include <doctest.h>

#include <random>

#include "wbu/expr_io.hpp"
#include "wbu/kernels.hpp"
#include "wbu/newton.hpp"

using namespace wbu;

TEST_CASE("default policy round trip") {
  auto old = kernels::default_policy();
  kernels::set_default_policy(kernels::Policy::Parallel);
  CHECK(kernels::default_policy() == kernels::Policy::Parallel);
  kernels::set_default_policy(old);
}

TEST_CASE("parallel antichain matches the serial reference") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> d(0, 9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<MultiIndex> pts;
    for (int i = 0; i < 300; ++i) pts.push_back({d(rng), d(rng), d(rng)});
    CHECK(kernels::antichain(pts, kernels::Policy::Parallel) == kernels::antichain(pts, kernels::Policy::Serial));
    CHECK(kernels::antichain(pts, kernels::Policy::Serial) == antichain(pts));
  }
}

TEST_CASE("indices of a fixed degree") {
  auto idx = kernels::indices_of_degree(3, {0, 2}, 3);
  CHECK(idx.size() == 4);
  for (const auto& g : idx) {
    CHECK(degree(g) == 3);
    CHECK(g[1] == 0);
  }
  CHECK(kernels::indices_of_degree(4, {0, 1, 2, 3}, 2).size() == 10);
}

TEST_CASE("derivative layers agree") {
  const std::vector<std::string> v{"x", "y", "z"};
  std::vector<Series> gens{Series(parse_poly("(x+y+z)^5 + x^3*y^2 - z^4", v)), Series(parse_poly("x*y*z", v))};
  for (int m = 0; m <= 3; ++m) {
    std::size_t t1 = 0, t2 = 0;
    auto a = kernels::derivative_layer(gens, m, {0, 1, 2}, kernels::Policy::Serial, t1);
    auto b = kernels::derivative_layer(gens, m, {0, 1, 2}, kernels::Policy::Parallel, t2);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].body == b[i].body);
    CHECK(t1 == t2);
  }
  std::size_t t = 0;
  auto first = kernels::derivative_layer({gens[1]}, 1, {0, 1, 2}, kernels::Policy::Serial, t);
  CHECK(first.size() == 3);
  CHECK(first[0].body == parse_poly("x*y", v));  // grlex puts the z-derivative first
}

TEST_CASE("for_each_index writes every slot once") {
  for (auto p : {kernels::Policy::Serial, kernels::Policy::Parallel}) {
    std::vector<int> out(1000, 0);
    kernels::for_each_index(out.size(), [&](std::size_t i) { out[i] += static_cast<int>(i); }, p);
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i));
  }
}
