#include "wbu/global_strat.hpp"

#include <numeric>

#include "wbu/blowup.hpp"
#include "wbu/errors.hpp"
#include "wbu/expr_io.hpp"
#include "wbu/frame.hpp"
#include "wbu/method_two.hpp"

namespace wbu {

namespace {

std::vector<Polynomial> bodies(const std::vector<Series>& s) {
  std::vector<Polynomial> out;
  for (const auto& g : s)
    if (!g.is_zero()) out.push_back(g.body);
  return out;
}

std::vector<Series> as_series(const std::vector<Polynomial>& gens) {
  return std::vector<Series>(gens.begin(), gens.end());
}

int max_total_degree(const std::vector<Polynomial>& gens) {
  int d = -1;
  for (const auto& g : gens) d = std::max(d, g.total_degree());
  return d;
}

}  // namespace

int max_order(const std::vector<Polynomial>& gens, const GbLimits& lim) {
  const int top = max_total_degree(gens);
  if (top < 0) throw MathError("zero ideal has no maximal order");
  const std::size_t n = gens.front().nvars();
  std::vector<std::size_t> slots(n);
  std::iota(slots.begin(), slots.end(), 0);
  if (is_unit_ideal(gens, lim)) throw MathError("unit ideal has no maximal order");
  for (int m = 1; m <= top; ++m) {
    std::size_t touched = 0;
    if (is_unit_ideal(bodies(derive_ideal(as_series(gens), m, slots, touched, kernels::Policy::Serial)), lim))
      return m;
  }
  throw InvariantViolation("derivatives of top order failed to produce a unit");
}

std::vector<Polynomial> stratum_ideal(const PreInvariant& a, const std::vector<Polynomial>& gens, const Rational& b,
                                      const GbLimits& lim) {
  if (gens.empty()) return {};
  const std::size_t n = gens.front().nvars();
  if (n > lim.max_vars) throw MathError("too large");
  DBracket D(as_series(gens), n, kernels::Policy::Serial);
  std::vector<Polynomial> out;
  for (const auto& bp : simplex_indices(a)) {
    Rational room = b * (1 - delta(a, bp));
    BigInt m = ceil_of(room) - 1;
    if (m < 0) continue;
    MultiIndex beta = bp;
    beta.push_back(static_cast<int>(m.get_si()));
    auto part = bodies(D.get(beta));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::optional<Rational> global_next_entry(const PreInvariant& a, const std::vector<Polynomial>& gens,
                                          const GbLimits& lim) {
  if (a.empty()) return Rational(max_order(gens, lim));
  const std::size_t n = gens.front().nvars();
  if (a.size() >= n) return std::nullopt;
  DBracket D(as_series(gens), n, kernels::Policy::Serial);
  std::optional<Rational> best;
  for (const auto& bp : simplex_indices(a)) {
    auto base = bodies(D.restricted(bp));
    const int top = max_total_degree(base);
    if (top < 0) continue;
    for (int m = 0; m <= top; ++m) {
      MultiIndex beta = bp;
      beta.push_back(m);
      if (!is_unit_ideal(bodies(D.get(beta)), lim)) continue;
      Rational v = Rational(m) / (1 - delta(a, bp));
      if (!best || v < *best) best = v;
      break;
    }
  }
  return best;
}

GlobalInvariant global_maxinv(const std::vector<std::string>& vars, const std::vector<Polynomial>& gens,
                              const PointQ& hint, const GbLimits& lim) {
  CentreResult r = associated_centre_m2(vars, gens, hint);
  GlobalInvariant out;
  out.frame_gens = to_compatible_exact(r.centre, translated_generators(gens, hint));
  out.frame_vars = compatible_names(r.centre);
  for (;;) {
    auto e = global_next_entry(out.maxinv, out.frame_gens, lim);
    if (!e) break;
    out.maxinv.push_back(*e);
  }
  return out;
}

PreInvariant invariant_at_point(const std::vector<std::string>& vars, const std::vector<Polynomial>& gens,
                                const PointQ& p) {
  return associated_centre_m2(vars, gens, p).centre.inv;
}

}  // namespace wbu
