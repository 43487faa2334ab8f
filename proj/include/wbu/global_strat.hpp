#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wbu/groebner.hpp"
#include "wbu/weighting.hpp"

namespace wbu {

// Least m with D^{<=m} I = (1). The ideal must be proper and nonzero.
int max_order(const std::vector<Polynomial>& gens, const GbLimits& lim = {});

// Sum of the D[β] with l(β) = j+1 and Ξ(β) < b, where j = |a| and the first j coordinates
// are the accepted parameters. The result lives on V(x_1..x_j).
std::vector<Polynomial> stratum_ideal(const PreInvariant& a, const std::vector<Polynomial>& gens, const Rational& b,
                                      const GbLimits& lim = {});

// The value of b at which the stratum ideal becomes (1); nullopt when the accepted parameters
// already give an admissible centre everywhere.
std::optional<Rational> global_next_entry(const PreInvariant& a, const std::vector<Polynomial>& gens,
                                          const GbLimits& lim = {});

struct GlobalInvariant {
  PreInvariant maxinv;
  std::vector<std::string> frame_vars;     // names of the coordinates the strata were computed in
  std::vector<Polynomial> frame_gens;      // generators in those coordinates
};

// Maximal invariant from stratum ideals, using the compatible coordinates found at `hint`.
GlobalInvariant global_maxinv(const std::vector<std::string>& vars, const std::vector<Polynomial>& gens,
                              const PointQ& hint, const GbLimits& lim = {});

PreInvariant invariant_at_point(const std::vector<std::string>& vars, const std::vector<Polynomial>& gens,
                                const PointQ& p);

}  // namespace wbu
