#include "wbu/newton.hpp"

#include <algorithm>

#include "wbu/errors.hpp"
#include "wbu/kernels.hpp"

namespace wbu {

std::vector<MultiIndex> antichain(std::vector<MultiIndex> pts) {
  return kernels::antichain(std::move(pts), kernels::default_policy());
}

NewtonSet newton_set(const std::vector<Series>& gens, std::size_t n) {
  NewtonSet N;
  N.n = n;
  std::vector<MultiIndex> pts;
  for (const auto& g : gens) {
    N.certified_degree = std::min(N.certified_degree, g.T);
    for (const auto& [a, c] : g.body.terms()) pts.push_back(a);
  }
  if (pts.empty()) throw MathError("empty Newton set");
  N.minimal = antichain(std::move(pts));
  return N;
}

std::optional<XiWitness> min_xi_over_newton(const PreInvariant& a, const NewtonSet& N) {
  std::optional<XiWitness> best;
  for (const auto& m : N.minimal) {  // grlex order, so strict improvement keeps the least witness
    ExtRational x = xi(a, m);
    if (x.infinite) continue;
    if (!best || x.value < best->value) best = XiWitness{x.value, m};
  }
  return best;
}

bool hyperplane_below(const PreInvariant& a, const NewtonSet& N) {
  for (const auto& m : N.minimal)
    if (delta(a, m) < 1) return false;
  return true;
}

}  // namespace wbu
