#pragma once

// Data-parallel kernels. Each has a serial reference path; the OpenMP path must agree with it
// exactly (results are assembled in a fixed order independent of scheduling).

#include <cstddef>
#include <vector>

#include "wbu/series.hpp"

namespace wbu::kernels {

enum class Policy { Serial, Parallel };

Policy default_policy();
void set_default_policy(Policy p);

std::vector<MultiIndex> antichain(std::vector<MultiIndex> pts, Policy policy);

// All γ with |γ| = m supported on the listed slots, grlex sorted.
std::vector<MultiIndex> indices_of_degree(std::size_t n, const std::vector<std::size_t>& slots, int m);

// ∂^γ g for every generator g and every γ of degree m on the given slots, ordered by (g, γ).
// Zero results are dropped. `touched` is incremented by the number of derivatives formed.
std::vector<Series> derivative_layer(const std::vector<Series>& gens, int m, const std::vector<std::size_t>& slots,
                                     Policy policy, std::size_t& touched);

// Runs body(i) for i in [0, count). With the parallel policy iterations may run concurrently,
// so body must only write to slot i of preallocated output.
template <class Body>
void for_each_index(std::size_t count, Body&& body, Policy policy) {
  if (policy == Policy::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(count); ++i) body(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < count; ++i) body(i);
  }
}

}  // namespace wbu::kernels
