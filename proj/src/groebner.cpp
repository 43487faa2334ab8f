#include "wbu/groebner.hpp"

#include <algorithm>

#include "wbu/errors.hpp"

namespace wbu {

bool grevlex_less(const MultiIndex& a, const MultiIndex& b) {
  int da = degree(a), db = degree(b);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

MultiIndex grevlex_leading(const Polynomial& f) {
  const MultiIndex* best = nullptr;
  for (const auto& [beta, c] : f.terms())
    if (!best || grevlex_less(*best, beta)) best = &beta;
  if (!best) throw InvariantViolation("leading term of zero");
  return *best;
}

namespace {

MultiIndex lcm_index(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

bool coprime(const MultiIndex& a, const MultiIndex& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

Polynomial shifted(const Polynomial& g, const MultiIndex& by, const Rational& c) {
  Polynomial out(g.nvars());
  for (const auto& [beta, d] : g.terms()) out.add_term(beta + by, c * d);
  return out;
}

Polynomial make_monic(const Polynomial& f) {
  Polynomial out = f;
  out *= 1 / f.coefficient(grevlex_leading(f));
  return out;
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  MultiIndex lf = grevlex_leading(f), lg = grevlex_leading(g);
  MultiIndex l = lcm_index(lf, lg);
  return shifted(f, l - lf, 1 / f.coefficient(lf)) - shifted(g, l - lg, 1 / g.coefficient(lg));
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  std::vector<MultiIndex> leads;
  for (const auto& g : basis) leads.push_back(grevlex_leading(g));
  Polynomial p = f, r(f.nvars());
  while (!p.is_zero()) {
    MultiIndex lt = grevlex_leading(p);
    Rational c = p.coefficient(lt);
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!divides(leads[i], lt)) continue;
      p -= shifted(basis[i], lt - leads[i], c / basis[i].coefficient(leads[i]));
      reduced = true;
      break;
    }
    if (!reduced) {
      r.add_term(lt, c);
      p.add_term(lt, -c);
    }
  }
  return r;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const GbLimits& lim) {
  std::vector<Polynomial> G;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.nvars() > lim.max_vars || g.total_degree() > lim.max_degree) throw MathError("too large");
    if (g.total_degree() == 0) return {{Polynomial::constant(g.nvars(), 1)}, "grevlex", true};
    G.push_back(make_monic(g));
  }
  GroebnerBasis out;
  if (G.empty()) return out;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  const int degree_wall = 4 * lim.max_degree;

  while (!pairs.empty()) {
    // Normal selection: the pair with the smallest lcm, grevlex.
    auto key = [&](const std::pair<std::size_t, std::size_t>& p) {
      return lcm_index(grevlex_leading(G[p.first]), grevlex_leading(G[p.second]));
    };
    auto it = std::min_element(pairs.begin(), pairs.end(),
                               [&](const auto& a, const auto& b) { return grevlex_less(key(a), key(b)); });
    auto [i, j] = *it;
    pairs.erase(it);
    if (coprime(grevlex_leading(G[i]), grevlex_leading(G[j]))) continue;
    Polynomial h = normal_form(s_polynomial(G[i], G[j]), G);
    if (h.is_zero()) continue;
    if (h.total_degree() == 0) return {{Polynomial::constant(h.nvars(), 1)}, "grevlex", true};
    if (h.total_degree() > degree_wall || G.size() >= lim.max_basis) throw MathError("too large");
    G.push_back(make_monic(h));
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
  }

  // Minimise, then interreduce.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    MultiIndex li = grevlex_leading(G[i]);
    bool redundant = false;
    for (std::size_t k = 0; k < G.size() && !redundant; ++k) {
      if (k == i) continue;
      MultiIndex lk = grevlex_leading(G[k]);
      if (divides(lk, li) && (lk != li || k < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    minimal[i] = make_monic(normal_form(minimal[i], others));
  }
  std::sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
    return grevlex_less(grevlex_leading(a), grevlex_leading(b));
  });
  out.generators = std::move(minimal);
  return out;
}

bool is_unit_ideal(const std::vector<Polynomial>& gens, const GbLimits& lim) {
  GroebnerBasis gb = buchberger(gens, lim);
  return gb.generators.size() == 1 && gb.generators[0].total_degree() == 0;
}

}  // namespace wbu
