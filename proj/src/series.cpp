#include "wbu/series.hpp"

#include <algorithm>
#include <set>

#include "wbu/errors.hpp"

namespace wbu {

namespace {
int min_t(int a, int b) { return std::min(a, b); }
}  // namespace

Series operator+(const Series& a, const Series& b) {
  int T = min_t(a.T, b.T);
  return Series((a.body + b.body).truncated(T), T);
}

Series operator-(const Series& a, const Series& b) {
  int T = min_t(a.T, b.T);
  return Series((a.body - b.body).truncated(T), T);
}

Series operator*(const Series& a, const Series& b) {
  int T = min_t(a.T, b.T);
  return Series(mul_truncated(a.body, b.body, T), T);
}

Series scale(const Series& a, const Rational& c) { return Series(a.body * c, a.T); }

Series derivative(const Series& f, std::size_t i) {
  int T = f.exact() ? Series::kExact : f.T - 1;
  return Series(partial_derivative(f.body, i), T);
}

Series derivative(const Series& f, const MultiIndex& gamma) {
  int T = f.exact() ? Series::kExact : f.T - degree(gamma);
  return Series(iterated_derivative(f.body, gamma).truncated(T), T);
}

Series restrict_zero(const Series& f, const std::vector<std::size_t>& killed) {
  return Series(f.body.restrict_zero(killed), f.T);
}

SubstitutionMap SubstitutionMap::identity(std::size_t n) {
  SubstitutionMap s;
  for (std::size_t i = 0; i < n; ++i) s.images.emplace_back(Polynomial::variable(n, i));
  return s;
}

Series substitute(const Series& f, const SubstitutionMap& s) {
  if (s.images.size() != f.nvars()) throw MathError("incomplete substitution");
  int T = std::min(f.T, s.T);
  std::vector<Polynomial> images;
  images.reserve(s.images.size());
  for (const auto& im : s.images) images.push_back(im.body);
  return Series(compose(f.body, images, T), T);
}

Series substitute(const Polynomial& f, const SubstitutionMap& s) { return substitute(Series(f), s); }

SubstitutionMap invert_etale_change(std::size_t n, std::size_t l, const Series& new_param, int T) {
  if (T <= 0) throw MathError("truncation order must be positive");
  if (new_param.body.constant_term() != 0) throw MathError("not a parameter at p");
  Rational c = new_param.body.coefficient(unit_index(n, l));
  if (c == 0) throw MathError("not a parameter at p");
  // u = x_l + h with h free of the x_l-linear term.
  Polynomial u = new_param.body * (Rational(1) / c);
  Polynomial h = u - Polynomial::variable(n, l);
  int Tu = new_param.T;

  SubstitutionMap sigma = SubstitutionMap::identity(n);
  if (h.is_zero()) return sigma;

  if (h.degree_in(l) <= 0) {
    // No dependence on x_l: the inverse is the polynomial x_l - h itself.
    sigma.images[l] = Series(Polynomial::variable(n, l) - h, Tu);
    sigma.T = Tu;
    return sigma;
  }

  int Tw = std::min(T, Tu);
  Polynomial xl = Polynomial::variable(n, l);
  Polynomial X = xl;
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(n, i));
  // Pass k settles the terms of degree k+1, so its truncation can stay at k+1.
  for (int pass = 0; pass < Tw; ++pass) {
    const int t = pass + 1;
    images[l] = X;
    X = (xl - compose(h, images, t)).truncated(t);
  }
  sigma.images[l] = Series(X, Tw);
  sigma.T = Tw;
  return sigma;
}

bool Ideal::exact() const {
  return std::all_of(gens.begin(), gens.end(), [](const Series& g) { return g.exact(); });
}

int Ideal::precision() const {
  int T = Series::kExact;
  for (const auto& g : gens) T = std::min(T, g.T);
  return T;
}

int Ideal::max_degree() const {
  int d = 0;
  for (const auto& g : gens) d = std::max(d, g.body.total_degree());
  return d;
}

std::vector<Series> prune_generators(const std::vector<Series>& gens) {
  std::vector<Series> out;
  std::set<std::pair<Polynomial, int>> seen;
  for (const auto& g : gens) {
    if (g.is_zero() && g.exact()) continue;
    if (seen.emplace(g.body.monic(), g.T).second) out.push_back(g);
  }
  return out;
}

std::vector<std::string> default_var_names(std::size_t n) {
  static const char* base[] = {"x", "y", "z", "w", "u", "v"};
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(i < 6 ? std::string(base[i]) : "x" + std::to_string(i + 1));
  return v;
}

}  // namespace wbu
