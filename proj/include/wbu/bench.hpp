#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "wbu/kernels.hpp"

namespace wbu {

struct BenchCase {
  std::string id;
  std::vector<std::string> vars;
  std::vector<std::string> ideal;
};

// A_1..A_6, cusp, Whitney umbrella, x^4+y^5+z^6 and x^4+x*y^4+y^6.
std::vector<BenchCase> bench_suite(const std::string& name);

struct BenchRow {
  std::string case_id;
  std::string method;  // "1", "2" or "atw"
  std::string invariant;
  std::string counter;  // what `work` counts
  std::string work;     // decimal, or factorial form for huge values
  BigInt work_value;
  double millis = 0;
  std::string error;
};

std::vector<BenchRow> run_bench(const std::vector<BenchCase>& cases, kernels::Policy policy);

// Work ratio atw / method 2 for a case; zero when either row is missing or failed.
Rational work_ratio(const std::vector<BenchRow>& rows, const std::string& case_id);

struct KernelTiming {
  std::string kernel;
  double serial_ms = 0;
  double parallel_ms = 0;
  bool agree = true;
};

// Times each parallel kernel against its serial reference on fixed inputs.
std::vector<KernelTiming> kernel_timings(int reps);

std::string bench_table(const std::vector<BenchRow>& rows, const std::vector<KernelTiming>& kernels);
nlohmann::json bench_json(const std::vector<BenchRow>& rows, const std::vector<KernelTiming>& kernels);

}  // namespace wbu
