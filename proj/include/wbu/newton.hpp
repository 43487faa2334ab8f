#pragma once

#include <optional>
#include <vector>

#include "wbu/weighting.hpp"

namespace wbu {

struct NewtonSet {
  std::size_t n = 0;
  std::vector<MultiIndex> minimal;  // antichain, grlex sorted
  int certified_degree = Series::kExact;
};

// Minimal elements of the union of (support(g) + N^n). Every monomial x^a·g contributes exactly
// the shifted support of g, and any element of the ideal is supported inside that union.
NewtonSet newton_set(const std::vector<Series>& gens, std::size_t n);

// Keep only the componentwise-minimal indices; input may be unsorted, output is grlex sorted.
std::vector<MultiIndex> antichain(std::vector<MultiIndex> pts);

struct XiWitness {
  Rational value;
  MultiIndex beta;
};
// Minimum of Ξ over minimal elements with Δ < 1; grlex-least witness on ties.
std::optional<XiWitness> min_xi_over_newton(const PreInvariant& a, const NewtonSet& N);

bool hyperplane_below(const PreInvariant& a, const NewtonSet& N);

}  // namespace wbu
