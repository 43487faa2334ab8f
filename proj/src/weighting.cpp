#include "wbu/weighting.hpp"

#include <algorithm>
#include <functional>

#include "wbu/errors.hpp"
#include "wbu/newton.hpp"

namespace wbu {

Rational delta(const PreInvariant& a, const MultiIndex& beta) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size() && i < beta.size(); ++i) s += Rational(beta[i]) / a[i];
  return s;
}

ExtRational xi(const PreInvariant& a, const MultiIndex& beta) {
  Rational d = delta(a, beta);
  if (d >= 1) return ExtRational::inf();
  long tail = 0;
  for (std::size_t i = a.size(); i < beta.size(); ++i) tail += beta[i];
  return ExtRational::of(Rational(tail) / (1 - d));
}

Marking marking_of(const PreInvariant& a) {
  Marking m;
  m.d = 1;
  for (const auto& q : a) mpz_lcm(m.d.get_mpz_t(), m.d.get_mpz_t(), q.get_num().get_mpz_t());
  BigInt g = 0;
  for (const auto& q : a) {
    Rational w = Rational(m.d) / q;
    if (w.get_den() != 1) throw InvariantViolation("marking produced a non-integral weight");
    m.weights.push_back(w.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.get_num().get_mpz_t());
  }
  if (!a.empty() && g != 1) throw InvariantViolation("marking weights are not coprime");
  return m;
}

int compare_inv(const PreInvariant& u, const PreInvariant& v) {
  std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] < v[i]) return -1;
    if (v[i] < u[i]) return 1;
  }
  if (u.size() == v.size()) return 0;
  return u.size() > v.size() ? -1 : 1;  // the shorter one is padded with +inf
}

std::string inv_to_string(const PreInvariant& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += a[i].get_den() == 1 ? a[i].get_num().get_str() : a[i].get_str();
  }
  return s + ")";
}

bool gamma_member(const PreInvariant& a) {
  if (a.empty()) return false;
  if (a[0].get_den() != 1 || a[0] <= 0) return false;
  for (std::size_t j = 1; j < a.size(); ++j) {
    if (a[j] < a[j - 1]) return false;
    // Search β in the box β_i < a_i with Δ < 1.
    bool found = false;
    MultiIndex beta(j, 0);
    std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t i, const Rational& d) {
      if (found) return;
      if (i == j) {
        Rational v = a[j] * (1 - d);
        if (v > 0 && v.get_den() == 1) found = true;
        return;
      }
      for (int b = 0; Rational(b) < a[i]; ++b) {
        Rational nd = d + Rational(b) / a[i];
        if (nd >= 1) break;
        rec(i + 1, nd);
      }
    };
    rec(0, 0);
    if (!found) return false;
  }
  return true;
}

MarkedCentre coordinate_centre(const std::vector<std::string>& vars, const PointQ& point, const PreInvariant& inv,
                               const std::vector<std::size_t>& slots) {
  const std::size_t n = vars.size();
  MarkedCentre J;
  J.vars = vars;
  J.base_point = point.empty() ? PointQ(n, 0) : point;
  J.inv = inv;
  J.marking = marking_of(inv);
  std::vector<std::size_t> order = slots;
  for (std::size_t v = 0; v < n; ++v)
    if (std::find(slots.begin(), slots.end(), v) == slots.end()) order.push_back(v);
  J.to_compatible.images.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    J.coordinates.emplace_back(Polynomial::variable(n, order[c]));
    J.to_compatible.images[order[c]] = Series(Polynomial::variable(n, c));
  }
  return J;
}

Valuation valuation_compatible(const PreInvariant& a, const Series& g) {
  Valuation v;
  Rational bound = 0;
  for (const auto& q : a) bound += q;
  BigInt ceil_bound = (bound.get_num() + bound.get_den() - 1) / bound.get_den();
  v.certified = g.exact() || BigInt(g.T) >= ceil_bound;
  if (g.is_zero()) {
    v.value = ExtRational::inf();
    return v;
  }
  bool first = true;
  for (const auto& [beta, c] : g.body.terms()) {
    Rational s = delta(a, beta);
    if (first || s < v.value.value) v.value = ExtRational::of(s);
    first = false;
  }
  return v;
}

Valuation valuation(const MarkedCentre& J, const Series& f) {
  return valuation_compatible(J.inv, substitute(f, J.to_compatible));
}

ExtRational valuation_F(const MarkedCentre& J, const Series& f) {
  Valuation v = valuation(J, f);
  if (v.value.infinite) return v.value;
  return ExtRational::of(v.value.value * J.marking.d);
}

std::vector<MultiIndex> filtration_piece(const MarkedCentre& J, long j) {
  const std::size_t k = J.k();
  std::vector<long> w;
  for (const auto& x : J.marking.weights) w.push_back(x.get_si());
  std::vector<MultiIndex> out;
  if (j <= 0) return {MultiIndex(k, 0)};
  MultiIndex beta(k, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long deg) {
    if (i == k) {
      if (deg < j) return;
      for (std::size_t t = 0; t < k; ++t)
        if (beta[t] > 0 && deg - w[t] >= j) return;  // not minimal
      out.push_back(beta);
      return;
    }
    long cap = (j + w[i] - 1) / w[i];
    for (long b = 0; b <= cap; ++b) {
      beta[i] = static_cast<int>(b);
      rec(i + 1, deg + b * w[i]);
    }
    beta[i] = 0;
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(), GrlexLess());
  return out;
}

bool is_admissible(const MarkedCentre& J, const std::vector<Series>& gens) {
  if (J.inv.empty()) return false;
  std::vector<Series> compat;
  for (const auto& g : gens) compat.push_back(substitute(g, J.to_compatible));
  NewtonSet N = newton_set(compat, J.n());
  bool below = hyperplane_below(J.inv, N);
  if (below && N.certified_degree != Series::kExact) {
    Rational bound = 0;
    for (const auto& q : J.inv) bound += q;
    if (Rational(N.certified_degree) < bound) throw MathError("raise truncation");
  }
  return below;
}

namespace {
std::size_t rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t t = c; t < cols; ++t) m[i][t] -= f * m[r][t];
    }
    ++r;
  }
  return r;
}
}  // namespace

bool compatible_check(const MarkedCentre& J, const std::vector<Series>& candidates) {
  if (candidates.size() != J.k()) return false;
  const std::size_t n = J.n();
  std::vector<std::vector<Rational>> lin;
  for (const auto& y : candidates) {
    if (y.body.constant_term() != 0) return false;
    std::vector<Rational> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = y.body.coefficient(unit_index(n, i));
    lin.push_back(row);
  }
  if (rank(lin) != J.k()) return false;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    Valuation v = valuation(J, candidates[i]);
    if (v.value.infinite || v.value.value != Rational(1) / J.inv[i]) return false;
  }
  return true;
}

MarkedCentre b_completion(const MarkedCentre& J, const Rational& b) {
  if (!J.inv.empty() && b < J.inv.back()) throw MathError("completion value below the last entry");
  MarkedCentre C = J;
  while (C.inv.size() < C.n()) C.inv.push_back(b);
  C.marking = marking_of(C.inv);
  return C;
}

}  // namespace wbu
