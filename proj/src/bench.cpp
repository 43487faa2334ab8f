#include "wbu/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "wbu/atw.hpp"
#include "wbu/errors.hpp"
#include "wbu/expr_io.hpp"
#include "wbu/method_one.hpp"
#include "wbu/method_two.hpp"
#include "wbu/newton.hpp"

namespace wbu {

std::vector<BenchCase> bench_suite(const std::string& name) {
  if (name != "paper") throw MathError("unknown bench suite: " + name);
  std::vector<BenchCase> cases;
  for (int m = 1; m <= 6; ++m)
    cases.push_back({"A" + std::to_string(m), {"x", "y"}, {"x^2-y^" + std::to_string(m + 1)}});
  cases.push_back({"cusp", {"x", "y"}, {"x^2-y^3"}});
  cases.push_back({"whitney", {"x", "y", "z"}, {"x^2-y^2*z"}});
  cases.push_back({"x4y5z6", {"x", "y", "z"}, {"x^4+y^5+z^6"}});
  cases.push_back({"newton-curve", {"x", "y"}, {"x^4+x*y^4+y^6"}});
  return cases;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

BenchRow run_one(const BenchCase& c, const std::string& method, kernels::Policy policy) {
  BenchRow row;
  row.case_id = c.id;
  row.method = method;
  std::vector<Polynomial> gens;
  for (const auto& s : c.ideal) gens.push_back(parse_poly(s, c.vars));
  const PointQ origin(c.vars.size(), 0);
  auto t0 = Clock::now();
  try {
    if (method == "atw") {
      AtwResult r = atw_centre(c.vars, gens, origin, AtwMode::OrderOnly);
      row.invariant = inv_to_string(r.a);
      row.counter = "coefficient-ideal exponents";
      row.work_value = r.work;
    } else {
      CentreResult r = method == "1" ? associated_centre_m1(c.vars, gens, origin)
                                     : associated_centre_m2(c.vars, gens, origin, policy);
      row.invariant = inv_to_string(r.centre.inv);
      row.counter = method == "1" ? "steps" : "derivative polynomials";
      row.work_value = static_cast<unsigned long>(r.work);
    }
    row.work = factorial_form(row.work_value);
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.millis = ms_since(t0);
  return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<BenchCase>& cases, kernels::Policy policy) {
  const std::vector<std::string> methods{"1", "2", "atw"};
  std::vector<BenchRow> rows(cases.size() * methods.size());
  kernels::for_each_index(
      rows.size(),
      [&](std::size_t i) { rows[i] = run_one(cases[i / methods.size()], methods[i % methods.size()], kernels::Policy::Serial); },
      policy);
  return rows;
}

Rational work_ratio(const std::vector<BenchRow>& rows, const std::string& case_id) {
  const BenchRow *m2 = nullptr, *atw = nullptr;
  for (const auto& r : rows) {
    if (r.case_id != case_id || !r.error.empty()) continue;
    if (r.method == "2") m2 = &r;
    if (r.method == "atw") atw = &r;
  }
  if (!m2 || !atw || m2->work_value == 0) return 0;
  Rational r(atw->work_value, m2->work_value);
  r.canonicalize();
  return r;
}

std::vector<KernelTiming> kernel_timings(int reps) {
  std::vector<KernelTiming> out;
  auto time_both = [&](const std::string& name, auto&& run) {
    KernelTiming k;
    k.kernel = name;
    auto t0 = Clock::now();
    auto serial = run(kernels::Policy::Serial);
    for (int r = 1; r < reps; ++r) serial = run(kernels::Policy::Serial);
    k.serial_ms = ms_since(t0) / reps;
    t0 = Clock::now();
    auto parallel = run(kernels::Policy::Parallel);
    for (int r = 1; r < reps; ++r) parallel = run(kernels::Policy::Parallel);
    k.parallel_ms = ms_since(t0) / reps;
    k.agree = serial == parallel;
    out.push_back(k);
  };

  std::vector<MultiIndex> pts;
  for (int a = 0; a < 40; ++a)
    for (int b = 0; b < 40; ++b) pts.push_back({a, b, (a * 7 + b * 13) % 17});
  time_both("antichain", [&](kernels::Policy p) { return kernels::antichain(pts, p); });

  const std::vector<std::string> vars{"x", "y", "z"};
  std::vector<Series> gens{Series(parse_poly("(x+y+z)^8 + x^4*y^5 - z^7", vars))};
  time_both("derivative-layer", [&](kernels::Policy p) {
    std::size_t touched = 0;
    auto layer = kernels::derivative_layer(gens, 4, {0, 1, 2}, p, touched);
    std::vector<Polynomial> bodies;
    for (const auto& s : layer) bodies.push_back(s.body);
    return bodies;
  });

  time_both("d-bracket-prefetch", [&](kernels::Policy p) {
    DBracket D(gens, 3, p);
    std::vector<MultiIndex> betas;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) betas.push_back({a, b});
    D.prefetch(betas);
    std::vector<Polynomial> bodies;
    for (const auto& b : betas)
      for (const auto& s : D.get(b)) bodies.push_back(s.body);
    return bodies;
  });
  return out;
}

std::string bench_table(const std::vector<BenchRow>& rows, const std::vector<KernelTiming>& kernels) {
  std::size_t cw = 8, ww = 5;
  for (const auto& r : rows) {
    cw = std::max(cw, r.counter.size() + 2);
    ww = std::max(ww, r.work.size() + 2);
  }
  const int counter_w = static_cast<int>(cw), work_w = static_cast<int>(ww);
  std::ostringstream os;
  os << std::left << std::setw(14) << "case" << std::setw(7) << "method" << std::setw(18) << "invariant"
     << std::setw(counter_w) << "counter" << std::setw(work_w) << "work" << "ms\n";
  for (const auto& r : rows) {
    os << std::setw(14) << r.case_id << std::setw(7) << r.method;
    if (!r.error.empty()) {
      os << "error: " << r.error << "\n";
      continue;
    }
    os << std::setw(18) << r.invariant << std::setw(counter_w) << r.counter << std::setw(work_w) << r.work << std::fixed
       << std::setprecision(3) << r.millis << "\n";
  }
  os << "\n" << std::setw(22) << "kernel" << std::setw(14) << "serial ms" << std::setw(14) << "parallel ms"
     << "agree\n";
  for (const auto& k : kernels)
    os << std::setw(22) << k.kernel << std::setw(14) << k.serial_ms << std::setw(14) << k.parallel_ms
       << (k.agree ? "yes" : "NO") << "\n";
  return os.str();
}

nlohmann::json bench_json(const std::vector<BenchRow>& rows, const std::vector<KernelTiming>& kernels) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j;
    j["case"] = r.case_id;
    j["method"] = r.method;
    j["wall_ms"] = r.millis;
    if (!r.error.empty()) {
      j["error"] = r.error;
    } else {
      j["invariant"] = r.invariant;
      j["counter"] = r.counter;
      j["work"] = r.work;
    }
    records.push_back(j);
  }
  nlohmann::json ks = nlohmann::json::array();
  for (const auto& k : kernels)
    ks.push_back({{"kernel", k.kernel}, {"serial_ms", k.serial_ms}, {"parallel_ms", k.parallel_ms}, {"agree", k.agree}});
  return {{"records", records}, {"kernels", ks}};
}

}  // namespace wbu
