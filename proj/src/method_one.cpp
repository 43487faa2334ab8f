#include "wbu/method_one.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "wbu/errors.hpp"

namespace wbu {

nlohmann::json trace_to_json(const std::vector<StepRecord>& trace) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : trace) {
    nlohmann::json r;
    r["entry"] = to_string(s.entry);
    r["witness"] = s.witness;
    r["slot"] = s.slot;
    r["generator"] = s.generator;
    if (s.truncation == Series::kExact)
      r["truncation"] = "exact";
    else
      r["truncation"] = s.truncation;
    out.push_back(r);
  }
  return out;
}

CentreSearchState start_state_at(const std::vector<std::string>& vars, const std::vector<Polynomial>& gens,
                                 const PointQ& p, int T) {
  CentreSearchState s;
  s.vars = vars;
  s.point = p;
  s.original = translated_generators(gens, p);
  s.frame = Frame::start(s.original, vars.size());
  s.T = T;
  return s;
}

CentreSearchState start_state(const std::vector<std::string>& vars, const std::vector<Polynomial>& gens,
                              const PointQ& p) {
  int maxdeg = 0;
  for (const auto& g : gens) maxdeg = std::max(maxdeg, g.total_degree());
  return start_state_at(vars, gens, p, maxdeg + 2);
}

std::optional<MarkedCentre> step(CentreSearchState& state) {
  Frame& fr = state.frame;
  const std::size_t n = fr.n();
  const std::size_t j = state.partial.size();
  bool any = std::any_of(fr.gens.begin(), fr.gens.end(), [](const Series& g) { return !g.is_zero(); });
  if (!any) throw NeedDeeper("every generator vanishes to the working truncation");

  NewtonSet N = newton_set(fr.gens, n);
  const bool exact = N.certified_degree == Series::kExact;
  Rational sum = 0;
  for (const auto& a : state.partial) sum += a;

  if (j >= 1 && hyperplane_below(state.partial, N)) {
    const int need = admissibility_degree(state.partial, n, max_degree(state.original));
    if (!exact && N.certified_degree < need) throw NeedDeeper("admissibility not certified", need - N.certified_degree);
    if (!exact && j < n) {
      Frame::TailCheck tc = fr.tail_check(state.original, j);
      if (tc.state == Frame::TailCheck::Nonzero)
        throw NeedDeeper("term in the remaining coordinates beyond the truncation",
                         std::max(1, tc.order + 1 - N.certified_degree));
    }
    MarkedCentre J = fr.centre(state.vars, state.point, state.partial);
    J.certified = exact || j == n;
    return J;
  }

  auto w = min_xi_over_newton(state.partial, N);
  if (!w) {
    if (!exact) throw NeedDeeper("no certified element below the simplex");
    throw InvariantViolation("no Newton element with Δ < 1 although the centre is not admissible");
  }
  if (!exact && BigInt(N.certified_degree) < ceil_of(sum + w->value))
    throw NeedDeeper("next entry not certified",
                     static_cast<int>(ceil_of(sum + w->value).get_si()) - N.certified_degree);
  if (j >= n) throw InvariantViolation("invariant longer than the ambient dimension");
  if (j >= 1 && w->value < state.partial.back()) throw InvariantViolation("invariant entries decreased");

  const MultiIndex& beta = w->beta;
  std::size_t l = j;
  while (l < n && beta[l] == 0) ++l;
  if (l == n) throw InvariantViolation("minimiser has no tail component");
  std::size_t gi = 0;
  while (gi < fr.gens.size() && fr.gens[gi].body.coefficient(beta) == 0) ++gi;
  if (gi == fr.gens.size()) throw InvariantViolation("minimiser not in any generator support");

  Series param = derivative(fr.gens[gi], beta - unit_index(n, l));
  fr.adopt_parameter(param, l, j, state.T);
  state.partial.push_back(w->value);
  state.trace.push_back({w->value, beta, l, gi, fr.exact() ? Series::kExact : state.T});
  return std::nullopt;
}

CentreResult associated_centre_m1(const std::vector<std::string>& vars, const std::vector<Polynomial>& gens,
                                  const PointQ& p) {
  CentreSearchState s0 = start_state(vars, gens, p);
  const int cap = truncation_cap();
  for (int T = s0.T;;) {
    CentreSearchState s = T == s0.T ? s0 : start_state_at(vars, gens, p, T);
    try {
      for (;;)
        if (auto J = step(s)) return {*J, s.trace, s.trace.size()};
    } catch (const NeedDeeper& e) {
      const int next = deepen(T, e);
      if (next > cap)
        throw MathError(std::string("truncation cap exceeded (") + e.what() + ", T=" + std::to_string(T) + ")");
      T = next;
    }
  }
}

namespace {

// Candidate values m/(1-Δ(β)) up to `bound`, for β in the box below the partial invariant.
std::vector<Rational> gamma_candidates(const PreInvariant& a, const Rational& bound) {
  std::set<Rational> deltas;
  MultiIndex beta(a.size(), 0);
  std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t i, const Rational& d) {
    if (i == a.size()) {
      deltas.insert(d);
      return;
    }
    for (int b = 0;; ++b) {
      Rational nd = d + Rational(b) / a[i];
      if (nd >= 1) break;
      rec(i + 1, nd);
    }
  };
  rec(0, 0);
  std::set<Rational> out;
  for (const auto& d : deltas)
    for (long m = 1; Rational(m) / (1 - d) <= bound; ++m) out.insert(Rational(m) / (1 - d));
  return {out.begin(), out.end()};
}

}  // namespace

Rational bcompletion_oracle(const CentreSearchState& state) {
  const PreInvariant& a = state.partial;
  Rational floor_b = a.empty() ? Rational(0) : a.back();
  MarkedCentre J = state.frame.centre(state.vars, state.point, a);
  Rational bound = 2 * std::max(Rational(1), floor_b);
  for (;;) {
    std::optional<Rational> last_ok;
    for (const auto& b : gamma_candidates(a, bound)) {
      if (b < floor_b || b == 0) continue;
      if (is_admissible(b_completion(J, b), state.original)) {
        last_ok = b;
      } else {
        if (!last_ok) throw InvariantViolation("no admissible completion at the starting value");
        return *last_ok;
      }
    }
    bound *= 2;
    if (bound > 1 << 16) throw InvariantViolation("completion sweep did not terminate");
  }
}

}  // namespace wbu
