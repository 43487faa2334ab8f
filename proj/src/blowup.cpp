#include "wbu/blowup.hpp"

#include <algorithm>
#include <functional>

#include "wbu/errors.hpp"
#include "wbu/expr_io.hpp"
#include "wbu/frame.hpp"
#include "wbu/groebner.hpp"
#include "wbu/method_two.hpp"

namespace wbu {

namespace {

std::vector<long> small_weights(const MarkedCentre& J) {
  std::vector<long> w;
  for (const auto& x : J.marking.weights) {
    if (!x.fits_slong_p() || x > 1000) throw MathError("weight too large for a chart");
    w.push_back(x.get_si());
  }
  return w;
}

}  // namespace

std::vector<std::string> compatible_names(const MarkedCentre& J) {
  std::vector<std::string> names;
  const std::size_t n = J.n();
  for (std::size_t c = 0; c < n; ++c) {
    std::string name = "u" + std::to_string(c + 1);
    const Polynomial& p = J.coordinates[c].body;
    if (J.coordinates[c].exact() && p.size() == 1 && p.terms().begin()->second == 1 && p.total_degree() == 1) {
      const MultiIndex& e = p.terms().begin()->first;
      name = J.vars[std::find(e.begin(), e.end(), 1) - e.begin()];
    }
    names.push_back(name);
  }
  return names;
}

bool is_smooth_invariant(const PreInvariant& a) {
  return !a.empty() && std::all_of(a.begin(), a.end(), [](const Rational& q) { return q == 1; });
}

ChartData chart_substitution(const MarkedCentre& J, std::size_t i) {
  const std::size_t n = J.n(), k = J.k();
  if (i >= k) throw MathError("chart index outside the centre");
  std::vector<long> w = small_weights(J);
  ChartData ch;
  ch.index = i;
  ch.weights = J.marking.weights;
  ch.stabilizer_order = J.marking.weights[i];
  for (std::size_t c = 0; c < n; ++c) {
    MultiIndex e(n, 0);
    if (c < k) e[i] = static_cast<int>(w[c]);
    if (c != i) e[c] += 1;
    ch.substitution.images.emplace_back(Polynomial::monomial(e));
  }
  ch.new_vars = compatible_names(J);
  std::string s = "s";
  while (std::find(ch.new_vars.begin(), ch.new_vars.end(), s) != ch.new_vars.end()) s += "_";
  ch.new_vars[i] = s;
  return ch;
}

std::vector<Polynomial> to_compatible_exact(const MarkedCentre& J, const std::vector<Series>& gens) {
  for (const auto& im : J.to_compatible.images)
    if (!im.exact()) throw MathError("centre needs a non-polynomial coordinate change");
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(substitute(g, J.to_compatible).body);
  return out;
}

std::vector<Polynomial> proper_transform(const std::vector<Polynomial>& gens, const MarkedCentre& J,
                                         const ChartData& chart) {
  std::vector<long> w = small_weights(J);
  const std::size_t k = J.k(), i = chart.index;
  std::vector<Polynomial> images;
  for (const auto& im : chart.substitution.images) images.push_back(im.body);
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    long v = LONG_MAX;
    for (const auto& [beta, c] : g.terms()) {
      long d = 0;
      for (std::size_t t = 0; t < k; ++t) d += w[t] * beta[t];
      v = std::min(v, d);
    }
    Polynomial h = compose(g, images);
    Polynomial q(h.nvars());
    bool reaches = false;
    for (const auto& [beta, c] : h.terms()) {
      if (beta[i] < v) throw InvariantViolation("exceptional power smaller than the valuation");
      MultiIndex b = beta;
      b[i] -= static_cast<int>(v);
      reaches = reaches || b[i] == 0;
      q.add_term(b, c);
    }
    if (!reaches) throw InvariantViolation("proper transform still divisible by s");
    out.push_back(q);
  }
  return out;
}

bool mu_character_consistent(const Polynomial& h, const ChartData& chart, const BigInt& v) {
  const std::size_t i = chart.index;
  const BigInt& wi = chart.stabilizer_order;
  BigInt target;
  mpz_mod(target.get_mpz_t(), v.get_mpz_t(), wi.get_mpz_t());
  for (const auto& [beta, c] : h.terms()) {
    BigInt ch = -beta[i];
    for (std::size_t t = 0; t < chart.weights.size(); ++t)
      if (t != i) ch += chart.weights[t] * beta[t];
    BigInt r;
    mpz_mod(r.get_mpz_t(), ch.get_mpz_t(), wi.get_mpz_t());
    if (r != target) return false;
  }
  return true;
}

Polynomial initial_form(const Polynomial& f, const PreInvariant& a) {
  Polynomial out(f.nvars());
  std::optional<Rational> best;
  for (const auto& [beta, c] : f.terms()) {
    Rational d = delta(a, beta);
    if (!best || d < *best) best = d;
  }
  for (const auto& [beta, c] : f.terms())
    if (delta(a, beta) == *best) out.add_term(beta, c);
  return out;
}

bool check_initialisation_invariance(const std::vector<std::string>& vars, const std::vector<Polynomial>& gens,
                                     const PointQ& p) {
  CentreResult r = associated_centre_m2(vars, gens, p);
  const MarkedCentre& J = r.centre;
  std::vector<Series> translated = translated_generators(gens, p);
  std::vector<Polynomial> init;
  if (J.to_compatible.exact()) {
    for (const auto& g : to_compatible_exact(J, translated)) init.push_back(initial_form(g, J.inv));
  } else {
    // With every coordinate weighted, a term of degree above T has Δ > (T+1)/a_max, so the
    // lowest-Δ terms are settled once that exceeds the minimum seen.
    if (J.k() < J.n()) throw MathError("initial form needs a polynomial coordinate change");
    const Rational amax = J.inv.back();
    for (int T = 2 * static_cast<int>(ceil_of(amax).get_si());; T *= 2) {
      if (T > truncation_cap()) throw MathError("truncation cap exceeded");
      SubstitutionMap sigma = invert_coordinates(J.coordinates, T);
      init.clear();
      bool settled = true;
      for (const auto& g : translated) {
        Polynomial h = substitute(g, sigma).body;
        Polynomial f = initial_form(h, J.inv);
        if (f.is_zero() || delta(J.inv, f.terms().begin()->first) * amax >= T + 1) settled = false;
        init.push_back(f);
      }
      if (settled) break;
    }
  }
  CentreResult r2 = associated_centre_m2(vars, init, PointQ(vars.size(), 0));
  return compare_inv(J.inv, r2.centre.inv) == 0;
}

namespace {

struct Resolver {
  const ResolveOptions& opts;
  std::size_t steps = 0;
  bool complete = true;

  std::vector<PointQ> candidate_points(std::size_t n, bool root) const {
    std::vector<PointQ> pts;
    pts.push_back(PointQ(n, 0));
    if (root)
      for (const auto& s : opts.samples) pts.push_back(s);
    const int r = opts.grid_radius;
    std::vector<int> idx(n, -r);
    if (n > 0 && n <= 4) {
      for (;;) {
        PointQ p;
        for (int v : idx) p.emplace_back(v);
        pts.push_back(p);
        std::size_t t = n;
        while (t > 0 && idx[t - 1] == r) idx[--t] = -r;
        if (t == 0) break;
        ++idx[t - 1];
      }
    }
    std::vector<PointQ> uniq;
    for (auto& p : pts)
      if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(std::move(p));
    return uniq;
  }

  ResolutionNode process(const std::vector<std::string>& vars, std::vector<Polynomial> gens, bool root) {
    ResolutionNode node;
    node.vars = vars;
    std::vector<Polynomial> kept;
    for (auto& g : gens)
      if (!g.is_zero() && std::find(kept.begin(), kept.end(), g) == kept.end()) kept.push_back(std::move(g));
    node.gens = kept;
    node.regime = "inspected";
    const std::size_t n = vars.size();
    if (kept.empty()) {
      node.note = "zero ideal";
      return node;
    }
    for (const auto& g : kept)
      if (g.total_degree() == 0) {
        node.note = "chart misses the proper transform";
        return node;
      }

    bool certified_smooth = false;
    if (kept.size() == 1) {
      std::vector<Polynomial> sing = kept;
      for (std::size_t i = 0; i < n; ++i) sing.push_back(partial_derivative(kept[0], i));
      try {
        certified_smooth = is_unit_ideal(sing);
      } catch (const MathError&) {
      }
    }

    std::optional<PreInvariant> best;
    std::optional<PointQ> best_point;
    for (const auto& p : candidate_points(n, root)) {
      bool on = std::all_of(kept.begin(), kept.end(), [&](const Polynomial& g) { return g.evaluate(p) == 0; });
      if (!on) continue;
      ++node.inspected;
      PreInvariant inv = associated_centre_m2(vars, kept, p).centre.inv;
      if (!best || compare_inv(inv, *best) > 0) {
        best = inv;
        best_point = p;
      }
    }
    node.maxinv = best;
    if (certified_smooth) {
      node.regime = "certified-smooth";
      if (!node.maxinv) node.maxinv = PreInvariant{1};
      return node;
    }
    if (!best || is_smooth_invariant(*best)) return node;
    if (steps >= opts.max_steps) {
      node.truncated = true;
      complete = false;
      return node;
    }

    CentreResult cr = associated_centre_m2(vars, kept, *best_point);
    std::vector<Series> translated = translated_generators(kept, *best_point);
    std::vector<Polynomial> compat;
    try {
      compat = to_compatible_exact(cr.centre, translated);
    } catch (const MathError& e) {
      node.note = e.what();
      complete = false;
      return node;
    }
    ++steps;
    node.centre_point = best_point;
    node.centre = cr.centre;
    for (std::size_t i = 0; i < cr.centre.k(); ++i) {
      ChartData ch = chart_substitution(cr.centre, i);
      ResolutionNode child = process(ch.new_vars, proper_transform(compat, cr.centre, ch), false);
      if (child.maxinv && compare_inv(*child.maxinv, *node.maxinv) >= 0)
        throw InvariantViolation("invariant failed to drop after blowing up: " + inv_to_string(*child.maxinv) +
                                 " vs " + inv_to_string(*node.maxinv));
      node.chart_of_child.push_back(i);
      node.children.push_back(std::move(child));
    }
    return node;
  }
};

nlohmann::json node_json(const ResolutionNode& node) {
  nlohmann::json j;
  j["vars"] = node.vars;
  nlohmann::json ideal = nlohmann::json::array();
  for (const auto& g : node.gens) ideal.push_back(render(g, node.vars));
  j["ideal"] = ideal;
  j["regime"] = node.regime;
  j["inspected_points"] = node.inspected;
  if (node.maxinv) {
    nlohmann::json m = nlohmann::json::array();
    for (const auto& a : *node.maxinv) m.push_back(to_string(a));
    j["maxinv"] = m;
  } else {
    j["maxinv"] = nullptr;
  }
  if (!node.note.empty()) j["note"] = node.note;
  if (node.truncated) j["truncated"] = true;
  if (node.centre) {
    nlohmann::json c;
    nlohmann::json pt = nlohmann::json::array();
    for (const auto& q : *node.centre_point) pt.push_back(to_string(q));
    c["point"] = pt;
    nlohmann::json w = nlohmann::json::array();
    for (const auto& x : node.centre->marking.weights) w.push_back(big_to_json(x));
    c["weights"] = w;
    nlohmann::json params = nlohmann::json::array();
    for (const auto& p : node.centre->params()) params.push_back(render(p.body, node.vars));
    c["parameters"] = params;
    j["centre"] = c;
    nlohmann::json kids = nlohmann::json::array();
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      nlohmann::json kid = node_json(node.children[i]);
      kid["chart"] = node.chart_of_child[i] + 1;
      kids.push_back(kid);
    }
    j["children"] = kids;
  }
  return j;
}

}  // namespace

ResolutionTrace resolve(const std::vector<std::string>& vars, const std::vector<Polynomial>& gens,
                        const ResolveOptions& opts) {
  if (opts.max_steps < 1) throw MathError("max_steps must be at least 1");
  Resolver r{opts};
  ResolutionTrace t;
  t.root = r.process(vars, gens, true);
  t.steps = r.steps;
  t.complete = r.complete;
  if (t.steps == 0 && t.complete)
    t.message = "already smooth";
  else if (!t.complete)
    t.message = "incomplete: step budget or centre limits reached";
  else
    t.message = t.root.regime == "certified-smooth" ? "resolved" : "resolved at inspected points";
  if (!verify_decrease(t.root)) throw InvariantViolation("trace verification failed");
  return t;
}

bool verify_decrease(const ResolutionNode& node) {
  for (const auto& c : node.children) {
    if (c.maxinv && (!node.maxinv || compare_inv(*c.maxinv, *node.maxinv) >= 0)) return false;
    if (!verify_decrease(c)) return false;
  }
  return true;
}

nlohmann::json trace_to_json(const ResolutionTrace& t) {
  nlohmann::json j;
  j["steps"] = t.steps;
  j["complete"] = t.complete;
  j["message"] = t.message;
  j["tree"] = node_json(t.root);
  return j;
}

}  // namespace wbu
