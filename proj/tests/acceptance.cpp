#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "wbu/atw.hpp"
#include "wbu/bench.hpp"
#include "wbu/blowup.hpp"
#include "wbu/errors.hpp"
#include "wbu/expr_io.hpp"
#include "wbu/global_strat.hpp"
#include "wbu/method_one.hpp"
#include "wbu/method_two.hpp"
#include "wbu/newton.hpp"
#include "wbu/validate.hpp"

using namespace wbu;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  std::ostringstream why;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      why << " [" << what << "]";
    }
  }
};

PreInvariant inv(std::initializer_list<Rational> xs) { return PreInvariant(xs); }
std::vector<BigInt> big(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}
std::vector<Series> series_of(const std::vector<std::string>& texts, const std::vector<std::string>& vars) {
  std::vector<Series> out;
  for (const auto& t : texts) out.emplace_back(parse_poly(t, vars));
  return out;
}
PointQ origin(std::size_t n) { return PointQ(n, 0); }

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

void am_family(Check& c) {
  for (int m = 1; m <= 6; ++m) {
    auto gens = std::vector<Polynomial>{parse_poly("x^2-y^" + std::to_string(m + 1), XY)};
    auto t0 = Clock::now();
    CentreResult r1 = associated_centre_m1(XY, gens, origin(2));
    CentreResult r2 = associated_centre_m2(XY, gens, origin(2));
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const std::string tag = "A" + std::to_string(m);
    c.expect(r1.centre.inv == inv({2, m + 1}), tag + " method 1 invariant");
    c.expect(r2.centre.inv == inv({2, m + 1}), tag + " method 2 invariant");
    auto w = m % 2 == 0 ? big({m + 1, 2}) : big({(m + 1) / 2, 1});
    c.expect(r2.centre.marking.weights == w, tag + " weights");
    c.expect(secs < 1.0, tag + " time");
  }
}

void whitney(Check& c) {
  auto gens = std::vector<Polynomial>{parse_poly("x^2-y^2*z", XYZ)};
  CentreResult r = associated_centre_m2(XYZ, gens, origin(3));
  CentreResult r1 = associated_centre_m1(XYZ, gens, origin(3));
  c.expect(r.centre.inv == inv({2, 3, 3}) && r1.centre.inv == r.centre.inv, "invariant");
  c.expect(r.centre.marking.weights == big({3, 2, 2}), "weights");
  c.expect(r.centre.marking.d == 6, "marking");
  MarkedCentre plain = coordinate_centre(XYZ, origin(3), inv({2, 3, 3}), {0, 1, 2});
  c.expect(compatible_check(r.centre, series_of({"x", "y", "z"}, XYZ)), "(x,y,z) compatible with computed centre");
  c.expect(compatible_check(plain, r.centre.params()), "computed parameters compatible with (x,y,z)");
  c.expect(invariant_at_point(XYZ, gens, {0, 0, 1}) == inv({2, 2}), "(0,0,1)");
  c.expect(invariant_at_point(XYZ, gens, {0, 0, -2}) == inv({2, 2}), "(0,0,-2)");
  c.expect(invariant_at_point(XYZ, gens, {1, 1, 1}) == inv({1}), "(1,1,1)");
}

void efficiency(Check& c) {
  auto gens = std::vector<Polynomial>{parse_poly("x^4+y^5+z^6", XYZ)};
  CentreResult r = associated_centre_m2(XYZ, gens, origin(3));
  c.expect(r.centre.inv == inv({4, 5, 6}), "method 2 invariant");
  MarkedCentre plain = coordinate_centre(XYZ, origin(3), inv({4, 5, 6}), {0, 1, 2});
  c.expect(compatible_check(plain, r.centre.params()), "parameters (x,y,z)");
  AtwResult a = atw_centre(XYZ, gens, origin(3), AtwMode::OrderOnly);
  BigInt f29 = 1;
  for (int i = 2; i <= 29; ++i) f29 *= i;
  c.expect(a.b.size() == 3 && a.b[0] == 4 && a.b[1] == 30 && a.b[2] == 36 * f29, "b = (4, 30, 36*29!)");
  c.expect(a.a == inv({4, 5, 6}), "baseline recovers a");
  bool overflow = false;
  try {
    atw_centre(XYZ, gens, origin(3), AtwMode::Full);
  } catch (const MathError& e) {
    overflow = std::string(e.what()).find("exponent overflow") != std::string::npos;
  }
  c.expect(overflow, "full mode overflow error");
  std::vector<BenchCase> cases;
  for (const auto& bc : bench_suite("paper"))
    if (bc.id == "x4y5z6") cases.push_back(bc);
  auto rows = run_bench(cases, kernels::Policy::Serial);
  c.expect(work_ratio(rows, "x4y5z6") >= 10, "work ratio >= 10");
}

void newton_curve(Check& c) {
  auto gens = std::vector<Polynomial>{parse_poly("x^4+x*y^4+y^6", XY)};
  CentreResult r1 = associated_centre_m1(XY, gens, origin(2));
  CentreResult r2 = associated_centre_m2(XY, gens, origin(2));
  c.expect(r1.centre.inv == inv({4, Rational(16, 3)}) && r2.centre.inv == r1.centre.inv, "invariant");
  c.expect(r1.centre.marking.d == 16, "marking");
  c.expect(r1.centre.marking.weights == big({4, 3}), "weights");
  NewtonSet N = newton_set(series_of({"x^4+x*y^4+y^6"}, XY), 2);
  std::vector<MultiIndex> dots{{4, 0}, {1, 4}, {0, 6}};
  std::sort(dots.begin(), dots.end(), GrlexLess());
  c.expect(N.minimal == dots, "dot set");
  std::string svg = newton_svg(N.minimal, r1.centre.inv);
  for (const char* s : {"(4,0)", "(1,4)", "(0,6)", "(4/1,4/1)", "(4/1,16/3)"})
    c.expect(svg.find(s) != std::string::npos, std::string("svg ") + s);
}

void cusp_filtration(Check& c) {
  MarkedCentre J = coordinate_centre(XY, origin(2), inv({2, 3}), {0, 1});
  const std::vector<std::vector<MultiIndex>> expected{
      {{0, 0}},
      {{0, 1}, {1, 0}},
      {{0, 1}, {1, 0}},
      {{1, 0}, {0, 2}},
      {{0, 2}, {1, 1}, {2, 0}},
      {{1, 1}, {2, 0}, {0, 3}},
      {{2, 0}, {0, 3}, {1, 2}},
  };
  for (long j = 0; j <= 6; ++j) {
    auto want = expected[static_cast<std::size_t>(j)];
    std::sort(want.begin(), want.end(), GrlexLess());
    c.expect(filtration_piece(J, j) == want, "F" + std::to_string(j));
  }
  c.expect(compatible_check(J, series_of({"x+y^2", "x^3+y"}, XY)), "accepts (x+y^2, x^3+y)");
  c.expect(!compatible_check(J, series_of({"y", "x"}, XY)), "rejects (y,x)");
}

void resolution(Check& c) {
  for (const char* f : {"x^2-y^3", "x^2-y^5", "x^2-y^7"}) {
    ResolutionTrace t = resolve(XY, {parse_poly(f, XY)});
    c.expect(t.steps == 1 && t.complete, std::string(f) + " one step");
    c.expect(verify_decrease(t.root), std::string(f) + " decrease");
  }
  ResolutionTrace w = resolve(XYZ, {parse_poly("x^2-y^2*z", XYZ)});
  c.expect(verify_decrease(w.root), "whitney decrease");
  c.expect(w.root.maxinv && *w.root.maxinv == inv({2, 3, 3}), "whitney root maxinv");
  bool children_ok = !w.root.children.empty();
  for (const auto& ch : w.root.children)
    if (ch.maxinv && compare_inv(*ch.maxinv, inv({2, 2})) > 0) children_ok = false;
  c.expect(children_ok, "whitney first blow-up <= (2,2)");
}

void property_suites(Check& c) {
  ValidateOptions opts;
  opts.samples = 1000;
  opts.seed = 42;
  opts.policy = kernels::Policy::Serial;
  auto t0 = Clock::now();
  auto results = run_validation(opts);
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  for (const auto& r : results) {
    c.expect(r.samples >= 1000, r.name + " sample count");
    c.expect(r.passed(), r.name + ": " + r.first_failure);
  }
  c.expect(secs < 60, "total time " + std::to_string(secs) + " s");
}

void initialisation(Check& c) {
  c.expect(check_initialisation_invariance(XY, {parse_poly("x^2-y^3+y^4", XY)}, origin(2)), "x^2-y^3+y^4");
  c.expect(check_initialisation_invariance(XYZ, {parse_poly("x^2-y^2*z-y^5", XYZ)}, origin(3)), "x^2-y^2*z-y^5");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"A_m family", am_family},
      {"Whitney umbrella", whitney},
      {"x^4+y^5+z^6 against the baseline", efficiency},
      {"plane curve x^4+xy^4+y^6", newton_curve},
      {"cusp filtration", cusp_filtration},
      {"resolution traces", resolution},
      {"property suites", property_suites},
      {"initialisation invariance", initialisation},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.why << " [exception: " << e.what() << "]";
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << c.why.str()
              << std::endl;
    if (!c.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
