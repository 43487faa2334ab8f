#include "wbu/atw.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "wbu/errors.hpp"
#include "wbu/expr_io.hpp"
#include "wbu/frame.hpp"
#include "wbu/method_two.hpp"

namespace wbu {

namespace {

BigInt factorial(long k) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

std::vector<BigInt> coefficient_exponents(int b) {
  std::vector<BigInt> e;
  BigInt bf = factorial(b);
  for (int i = 0; i < b; ++i) e.push_back(bf / (b - i));
  return e;
}

void check_cap(const std::vector<BigInt>& exps, AtwMode mode, long cap) {
  if (mode != AtwMode::Full) return;
  for (const auto& e : exps)
    if (e > cap) throw MathError("exponent overflow; use order-only");
}

}  // namespace

std::optional<BigInt> PoweredIdealSum::order() const {
  std::optional<BigInt> best;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    OrderInfo info = ideal_order(ideals[i]);
    if (info.zero) continue;
    if (!info.certain) throw MathError("coefficient ideal order hidden by truncation");
    BigInt v = exponents[i] * info.order;
    if (!best || v < *best) best = v;
  }
  return best;
}

PoweredIdealSum coefficient_ideal(const std::vector<Series>& gens, int b, AtwMode mode, long cap) {
  if (b < 1) throw MathError("coefficient ideal needs b >= 1");
  PoweredIdealSum P;
  P.mode = mode;
  P.exponents = coefficient_exponents(b);
  check_cap(P.exponents, mode, cap);
  const std::size_t n = gens.empty() ? 0 : gens.front().nvars();
  std::vector<std::size_t> slots(n);
  std::iota(slots.begin(), slots.end(), 0);
  std::size_t touched = 0;
  for (int i = 0; i < b; ++i) P.ideals.push_back(derive_ideal(gens, i, slots, touched));
  return P;
}

std::vector<Series> restricted_derivative_ideal(const std::vector<Series>& gens, int i, std::size_t kill,
                                                const std::vector<std::size_t>& free_slots) {
  std::vector<Series> out;
  std::size_t touched = 0;
  for (int k = 0; k <= i; ++k) {
    std::vector<Series> slices;
    for (const auto& g : gens) {
      Polynomial s = g.body.slice(kill, k);
      if (s.is_zero() && g.exact()) continue;
      slices.emplace_back(s, g.exact() ? Series::kExact : g.T - k);
    }
    auto d = derive_ideal(slices, i - k, free_slots, touched, kernels::Policy::Serial);
    out.insert(out.end(), d.begin(), d.end());
  }
  return reduce_monomial_generators(out);
}

PoweredIdealSum restricted_coefficient_ideal(const std::vector<Series>& gens, int b, std::size_t kill,
                                             const std::vector<std::size_t>& free_slots, AtwMode mode, long cap) {
  PoweredIdealSum P;
  P.mode = mode;
  P.exponents = coefficient_exponents(b);
  check_cap(P.exponents, mode, cap);
  for (int i = 0; i < b; ++i) P.ideals.push_back(restricted_derivative_ideal(gens, i, kill, free_slots));
  return P;
}

std::vector<Series> reduce_monomial_generators(const std::vector<Series>& gens) {
  std::vector<MultiIndex> monos;
  for (const auto& g : gens)
    if (g.exact() && g.body.size() == 1) monos.push_back(g.body.terms().begin()->first);
  monos = antichain(std::move(monos));
  auto covered = [&](const MultiIndex& a) {
    return std::any_of(monos.begin(), monos.end(), [&](const MultiIndex& m) { return divides(m, a); });
  };
  std::vector<Series> out;
  for (const auto& m : monos) out.emplace_back(Polynomial::monomial(m));
  for (const auto& g : gens) {
    if (g.exact() && g.body.size() <= 1) continue;  // monomials handled above, zeros dropped
    bool inside = g.exact() && std::all_of(g.body.terms().begin(), g.body.terms().end(),
                                           [&](const auto& t) { return covered(t.first); });
    if (!inside) out.push_back(g);
  }
  return prune_generators(out);
}

std::vector<Series> materialize(const PoweredIdealSum& P, long cap) {
  std::vector<Series> out;
  for (std::size_t s = 0; s < P.ideals.size(); ++s) {
    if (P.exponents[s] > cap) throw MathError("exponent overflow; use order-only");
    const auto& K = P.ideals[s];
    if (K.empty()) continue;
    long e = P.exponents[s].get_si();
    std::vector<Series> power = K;
    for (long t = 1; t < e; ++t) {
      std::vector<Series> next;
      for (const auto& p : power)
        for (const auto& k : K) next.push_back(p * k);
      power = reduce_monomial_generators(next);
    }
    out.insert(out.end(), power.begin(), power.end());
  }
  return reduce_monomial_generators(out);
}

AtwResult atw_centre(const std::vector<std::string>& vars, const std::vector<Polynomial>& gens, const PointQ& p,
                     AtwMode mode, long cap) {
  const std::size_t n = vars.size();
  std::vector<Series> orig = translated_generators(gens, p);
  int maxdeg = 0;
  for (const auto& g : gens) maxdeg = std::max(maxdeg, g.total_degree());
  const int T = 4 * (maxdeg + 2);

  AtwResult res;
  res.work = 0;
  Frame fr = Frame::start(orig, n);
  std::vector<std::size_t> free(n);
  std::iota(free.begin(), free.end(), 0);
  BigInt denom = 1;
  bool powered = false;
  PoweredIdealSum P;

  for (std::size_t j = 0;; ++j) {
    BigInt bj;
    if (!powered) {
      OrderInfo info = ideal_order(fr.gens);
      if (info.zero) throw InvariantViolation("zero ideal at the start of a level");
      if (!info.certain) throw MathError("baseline needs polynomial coordinate changes");
      bj = info.order;
    } else {
      auto o = P.order();
      if (!o) throw InvariantViolation("zero ideal at the start of a level");
      bj = *o;
    }
    res.b.push_back(bj);
    res.a.push_back(Rational(bj) / denom);

    const std::size_t target = j;
    nlohmann::json step;
    step["b"] = big_to_json(bj);
    step["a"] = to_string(res.a.back());
    if (!powered) {
      // An order-b element differentiated down to order one is a maximal contact element.
      std::size_t gi = 0;
      while (fr.gens[gi].body.is_zero() || fr.gens[gi].order() != bj) ++gi;
      const Series& g = fr.gens[gi];
      MultiIndex alpha = g.body.terms().begin()->first;
      std::size_t l = target;
      while (alpha[l] == 0) ++l;
      Series param = derivative(g, alpha - unit_index(n, l));
      fr.adopt_parameter(param, l, target, T);
      step["slot"] = l;
      step["generator"] = gi;
    } else {
      if (free.size() != 1) throw MathError("order-only depth exceeded: exponents too large to expand");
      step["slot"] = target;
    }
    res.params.push_back(fr.coordinates[target]);
    free.erase(std::find(free.begin(), free.end(), target));
    if (free.empty()) {
      res.trace.push_back(step);
      break;
    }
    if (bj > 4096) throw MathError("order too large for a coefficient ideal");
    int b = static_cast<int>(bj.get_si());
    P = restricted_coefficient_ideal(fr.gens, b, target, free, mode, cap);
    nlohmann::json ex = nlohmann::json::array();
    for (const auto& e : P.exponents) {
      res.work += e;
      ex.push_back(factorial_form(e));
    }
    step["exponents"] = ex;
    res.trace.push_back(step);
    denom *= factorial(b - 1);
    bool all_zero = std::all_of(P.ideals.begin(), P.ideals.end(), [](const auto& K) { return K.empty(); });
    if (all_zero) break;
    bool small = std::all_of(P.exponents.begin(), P.exponents.end(), [&](const BigInt& e) { return e <= cap; });
    if (small) {
      fr.gens = materialize(P, cap);
      powered = false;
    } else {
      powered = true;
    }
  }
  return res;
}

BigInt simplex_size(const PreInvariant& a) {
  BigInt count = 0;
  std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t i, const Rational& d) {
    if (i == a.size()) {
      ++count;
      return;
    }
    for (long b = 0;; ++b) {
      Rational nd = d + Rational(b) / a[i];
      if (nd >= 1) break;
      rec(i + 1, nd);
    }
  };
  rec(0, 0);
  return count;
}

Rational sigma_bound(const PreInvariant& a) {
  const std::size_t j = a.size();
  Rational total = 0;
  for (unsigned long mask = 0; mask < (1ul << j); ++mask) {
    Rational prod = 1;
    long size = 0;
    for (std::size_t l = 0; l < j; ++l)
      if (mask & (1ul << l)) {
        prod *= a[l];
        ++size;
      }
    total += prod / Rational(factorial(size));
  }
  return total;
}

std::string factorial_form(const BigInt& z) {
  if (abs(z) < BigInt("1000000000000")) return z.get_str();
  long k = 1;
  BigInt f = 1;
  while (true) {
    BigInt nf = f * (k + 1);
    if (!mpz_divisible_p(z.get_mpz_t(), nf.get_mpz_t())) break;
    f = nf;
    ++k;
  }
  BigInt c = z / f;
  if (k < 5) return z.get_str();
  return (c == 1 ? std::string() : c.get_str() + "*") + std::to_string(k) + "!";
}

}  // namespace wbu
