#include "wbu/validate.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "wbu/atw.hpp"
#include "wbu/errors.hpp"
#include "wbu/method_one.hpp"
#include "wbu/method_two.hpp"
#include "wbu/weighting.hpp"

namespace wbu {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Non-decreasing positive rationals with small numerators and denominators.
PreInvariant random_preinvariant(Rng& rng, std::size_t len, int max_num) {
  PreInvariant a;
  for (std::size_t i = 0; i < len; ++i) {
    Rational q(uniform(rng, 1, max_num), uniform(rng, 1, 3));
    q.canonicalize();
    if (q < 1) q = 1;
    a.push_back(q);
  }
  std::sort(a.begin(), a.end());
  return a;
}

// Ξ as used by the numerical suites, optionally with the sign mutation applied.
ExtRational xi_under_test(const PreInvariant& b, const MultiIndex& beta, bool mutated) {
  if (!mutated) return xi(b, beta);
  Rational d = delta(b, beta);
  if (d >= 1) return ExtRational::inf();
  long tail = 0;
  for (std::size_t i = b.size(); i < beta.size(); ++i) tail += beta[i];
  return ExtRational::of(Rational(tail) / (d - 1));
}

std::string show(const MultiIndex& m) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  os << ")";
  return os.str();
}

struct RandomIdeal {
  std::vector<std::string> vars;
  std::vector<Polynomial> gens;
};

// n <= 3 variables, at most 2 generators, total degree <= 6, vanishing at the origin.
RandomIdeal random_ideal(Rng& rng, std::size_t min_vars) {
  RandomIdeal r;
  const std::size_t n = static_cast<std::size_t>(uniform(rng, static_cast<int>(min_vars), 3));
  r.vars = default_var_names(n);
  const int ngens = uniform(rng, 1, 2);
  for (int g = 0; g < ngens; ++g) {
    Polynomial f(n);
    const int nterms = uniform(rng, 1, 4);
    for (int t = 0; t < nterms; ++t) {
      MultiIndex e(n, 0);
      const int deg = uniform(rng, 1, 6);
      for (int k = 0; k < deg; ++k) ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1))];
      int c = uniform(rng, -3, 3);
      f.add_term(e, c == 0 ? 1 : c);
    }
    if (f.is_zero()) f = Polynomial::variable(n, 0);
    r.gens.push_back(f);
  }
  return r;
}

Polynomial random_small_poly(Rng& rng, std::size_t n) {
  Polynomial f(n);
  const int nterms = uniform(rng, 1, 3);
  for (int t = 0; t < nterms; ++t) {
    MultiIndex e(n);
    for (auto& x : e) x = uniform(rng, 0, 4);
    int c = uniform(rng, -2, 2);
    f.add_term(e, c == 0 ? 1 : c);
  }
  return f;
}

std::string show(const RandomIdeal& I) {
  std::string out = " on (";
  for (std::size_t i = 0; i < I.gens.size(); ++i) out += (i ? ", " : "") + render(I.gens[i], I.vars);
  return out + ")";
}

PreInvariant m2_invariant(const RandomIdeal& I) {
  return associated_centre_m2(I.vars, I.gens, PointQ(I.vars.size(), 0), kernels::Policy::Serial).centre.inv;
}

// Runs `check(i)` for every sample; each returns an empty string on success.
template <class Check>
SuiteResult run_suite(const std::string& name, std::size_t count, kernels::Policy policy, Check&& check) {
  std::vector<std::string> verdicts(count);
  kernels::for_each_index(
      count,
      [&](std::size_t i) {
        try {
          verdicts[i] = check(i);
        } catch (const std::exception& e) {
          verdicts[i] = std::string("exception: ") + e.what();
        }
      },
      policy);
  SuiteResult r;
  r.name = name;
  r.samples = count;
  for (std::size_t i = 0; i < count; ++i) {
    if (verdicts[i].empty()) continue;
    if (r.failures++ == 0) r.first_failure = "sample " + std::to_string(i) + ": " + verdicts[i];
  }
  return r;
}

}  // namespace

std::vector<SuiteResult> run_validation(const ValidateOptions& opts) {
  const std::size_t N = opts.samples;
  const bool mutated = opts.mutate == "xi-sign";
  if (!opts.mutate.empty() && !mutated) throw MathError("unknown mutation: " + opts.mutate);
  Rng rng(opts.seed);
  std::vector<SuiteResult> out;

  // Numerical theorem: prefix sums of γ bounded by those of β.
  {
    struct Sample {
      PreInvariant b;
      MultiIndex beta, gamma;
    };
    std::vector<Sample> samples;
    for (std::size_t i = 0; i < N; ++i) {
      Sample s;
      const std::size_t j = static_cast<std::size_t>(uniform(rng, 1, 3));
      s.b = random_preinvariant(rng, j, 12);
      s.beta.resize(j + 1);
      for (auto& x : s.beta) x = uniform(rng, 0, 6);
      int prefix_beta = 0, prefix_gamma = 0;
      for (std::size_t l = 0; l <= j; ++l) {
        prefix_beta += s.beta[l];
        s.gamma.push_back(uniform(rng, 0, prefix_beta - prefix_gamma));
        prefix_gamma += s.gamma.back();
      }
      samples.push_back(std::move(s));
    }
    out.push_back(run_suite("numerical-theorem", N, opts.policy, [&](std::size_t i) -> std::string {
      const Sample& s = samples[i];
      ExtRational xg = xi_under_test(s.b, s.gamma, mutated), xb = xi_under_test(s.b, s.beta, mutated);
      if (xg <= xb || xg < ExtRational::of(s.b.back())) return {};
      return "beta " + show(s.beta) + " gamma " + show(s.gamma) + " Xi(gamma)=" + xg.str();
    }));
  }

  // Numerical lemma: Σβ > Ξ(β) forces Σβ < b_j.
  {
    std::vector<std::pair<PreInvariant, MultiIndex>> samples;
    for (std::size_t i = 0; i < N; ++i) {
      const std::size_t j = static_cast<std::size_t>(uniform(rng, 1, 3));
      PreInvariant b = random_preinvariant(rng, j, 12);
      MultiIndex beta(j + 1);
      for (auto& x : beta) x = uniform(rng, 0, 6);
      samples.emplace_back(b, beta);
    }
    out.push_back(run_suite("numerical-lemma", N, opts.policy, [&](std::size_t i) -> std::string {
      const auto& [b, beta] = samples[i];
      ExtRational total = ExtRational::of(degree(beta));
      if (!(xi_under_test(b, beta, mutated) < total)) return {};
      if (total < ExtRational::of(b.back())) return {};
      return "beta " + show(beta) + " sum " + total.str() + " not below " + to_string(b.back());
    }));
  }

  // v(fg) = v(f) + v(g) and the ultrametric inequality.
  {
    struct Sample {
      PreInvariant a;
      Polynomial f, g;
    };
    std::vector<Sample> samples;
    for (std::size_t i = 0; i < N; ++i) {
      const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 3));
      Sample s{random_preinvariant(rng, static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(n))), 9),
               random_small_poly(rng, n), random_small_poly(rng, n)};
      samples.push_back(std::move(s));
    }
    out.push_back(run_suite("valuation", N, opts.policy, [&](std::size_t i) -> std::string {
      const Sample& s = samples[i];
      auto v = [&](const Polynomial& p) { return valuation_compatible(s.a, Series(p)).value; };
      ExtRational vf = v(s.f), vg = v(s.g), vfg = v(s.f * s.g), vsum = v(s.f + s.g);
      ExtRational expect = (vf.infinite || vg.infinite) ? ExtRational::inf() : ExtRational::of(vf.value + vg.value);
      if (!(vfg == expect)) return "product valuation " + vfg.str() + " expected " + expect.str();
      ExtRational lo = vf < vg ? vf : vg;
      if (vsum < lo) return "sum valuation below the minimum";
      if (!(vf == vg) && !(vsum == lo)) return "sum valuation differs from the minimum of distinct values";
      return {};
    }));
  }

  // Random ideals shared by the invariant-level suites.
  std::vector<RandomIdeal> ideals, restrictable;
  for (std::size_t i = 0; i < N; ++i) ideals.push_back(random_ideal(rng, 1));
  while (restrictable.size() < N) {
    RandomIdeal I = random_ideal(rng, 2);
    const std::size_t last = I.vars.size() - 1;
    bool proper = std::any_of(I.gens.begin(), I.gens.end(),
                              [&](const Polynomial& g) { return !g.restrict_zero({last}).is_zero(); });
    if (proper) restrictable.push_back(std::move(I));
  }
  std::vector<PreInvariant> inv2(N);
  std::vector<std::string> inv2_error(N);
  kernels::for_each_index(
      N,
      [&](std::size_t i) {
        try {
          inv2[i] = m2_invariant(ideals[i]);
        } catch (const std::exception& e) {
          inv2_error[i] = e.what();
        }
      },
      opts.policy);
  auto need_inv = [&](std::size_t i) {
    if (!inv2_error[i].empty()) throw MathError(inv2_error[i]);
    return inv2[i];
  };

  out.push_back(run_suite("gamma-membership", N, opts.policy, [&](std::size_t i) -> std::string {
    const PreInvariant& a = need_inv(i);
    return gamma_member(a) ? std::string() : "invariant " + inv_to_string(a) + " outside the value set";
  }));

  out.push_back(run_suite("method1-equals-method2", N, opts.policy, [&](std::size_t i) -> std::string {
    const RandomIdeal& I = ideals[i];
    PreInvariant a1 = associated_centre_m1(I.vars, I.gens, PointQ(I.vars.size(), 0)).centre.inv;
    const PreInvariant& a2 = need_inv(i);
    if (compare_inv(a1, a2) == 0) return {};
    return "method 1 " + inv_to_string(a1) + " vs method 2 " + inv_to_string(a2) + show(I);
  }));

  out.push_back(run_suite("re-embedding", N, opts.policy, [&](std::size_t i) -> std::string {
    const RandomIdeal& I = ideals[i];
    const std::size_t n = I.vars.size();
    RandomIdeal E{default_var_names(n + 1), {}};
    for (const auto& g : I.gens) E.gens.push_back(g.with_inserted_var(n));
    E.gens.push_back(Polynomial::variable(n + 1, n));
    PreInvariant expect{1};
    for (const auto& q : need_inv(i)) expect.push_back(q);
    PreInvariant got = m2_invariant(E);
    return compare_inv(got, expect) == 0 ? std::string()
                                         : "got " + inv_to_string(got) + " expected " + inv_to_string(expect) + show(I);
  }));

  out.push_back(run_suite("smooth-pullback", N, opts.policy, [&](std::size_t i) -> std::string {
    const RandomIdeal& I = ideals[i];
    const std::size_t n = I.vars.size();
    RandomIdeal E{default_var_names(n + 1), {}};
    for (const auto& g : I.gens) E.gens.push_back(g.with_inserted_var(0));
    PreInvariant got = m2_invariant(E);
    const PreInvariant& expect = need_inv(i);
    return compare_inv(got, expect) == 0 ? std::string()
                                         : "got " + inv_to_string(got) + " expected " + inv_to_string(expect) + show(I);
  }));

  out.push_back(run_suite("restriction-inequality", N, opts.policy, [&](std::size_t i) -> std::string {
    const RandomIdeal& I = restrictable[i];
    const std::size_t last = I.vars.size() - 1;
    RandomIdeal W{std::vector<std::string>(I.vars.begin(), I.vars.end() - 1), {}};
    for (const auto& g : I.gens) {
      Polynomial r = g.restrict_zero({last});
      if (!r.is_zero()) W.gens.push_back(r.dropped_var(last));
    }
    PreInvariant whole = m2_invariant(I), slice = m2_invariant(W);
    if (compare_inv(whole, slice) <= 0) return {};
    return "inv " + inv_to_string(whole) + " exceeds restricted " + inv_to_string(slice) + show(I);
  }));

  {
    std::vector<PreInvariant> samples;
    for (std::size_t i = 0; i < N; ++i)
      samples.push_back(random_preinvariant(rng, static_cast<std::size_t>(uniform(rng, 1, 3)), 10));
    SuiteResult r = run_suite("sigma-bound", N, opts.policy, [&](std::size_t i) -> std::string {
      BigInt count = simplex_size(samples[i]);
      Rational bound = sigma_bound(samples[i]);
      if (Rational(count) <= bound) return {};
      return inv_to_string(samples[i]) + ": " + count.get_str() + " simplex points above " + to_string(bound);
    });
    PreInvariant datapoint{4, 5};
    if (simplex_size(datapoint) != 14 && r.failures++ == 0) r.first_failure = "simplex size of (4,5) is not 14";
    ++r.samples;
    out.push_back(r);
  }
  return out;
}

nlohmann::json validation_to_json(const std::vector<SuiteResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    nlohmann::json j;
    j["suite"] = r.name;
    j["samples"] = r.samples;
    j["failures"] = r.failures;
    j["passed"] = r.passed();
    if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
    arr.push_back(j);
    all = all && r.passed();
  }
  return {{"suites", arr}, {"passed", all}};
}

std::string validation_to_text(const std::vector<SuiteResult>& results) {
  std::ostringstream os;
  bool all = true;
  for (const auto& r : results) {
    os << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.samples << " samples, " << r.failures
       << " failures)";
    if (!r.first_failure.empty()) os << ": " << r.first_failure;
    os << "\n";
    all = all && r.passed();
  }
  os << (all ? "all suites passed\n" : "some suites failed\n");
  return os.str();
}

}  // namespace wbu
