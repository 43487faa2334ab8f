#pragma once

#include <string>
#include <vector>

#include "wbu/polynomial.hpp"

namespace wbu {

// Desk-scale guard for Buchberger runs.
struct GbLimits {
  std::size_t max_vars = 4;
  int max_degree = 12;
  std::size_t max_basis = 400;  // intermediate basis size before giving up
};

struct GroebnerBasis {
  std::vector<Polynomial> generators;  // reduced, monic, sorted by leading monomial
  std::string order = "grevlex";
  bool reduced = true;
};

// Graded reverse lexicographic order on exponent vectors.
bool grevlex_less(const MultiIndex& a, const MultiIndex& b);
MultiIndex grevlex_leading(const Polynomial& f);

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const GbLimits& lim = {});
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

bool is_unit_ideal(const std::vector<Polynomial>& gens, const GbLimits& lim = {});

}  // namespace wbu
