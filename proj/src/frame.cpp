#include "wbu/frame.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <optional>

#include "wbu/errors.hpp"

namespace wbu {

Frame Frame::start(const std::vector<Series>& gens, std::size_t n) {
  Frame f;
  f.gens = gens;
  for (std::size_t i = 0; i < n; ++i) f.coordinates.emplace_back(Polynomial::variable(n, i));
  f.back = SubstitutionMap::identity(n);
  return f;
}

bool Frame::exact() const {
  return std::all_of(gens.begin(), gens.end(), [](const Series& g) { return g.exact(); });
}

void Frame::adopt_parameter(const Series& param, std::size_t l, std::size_t target, int T) {
  const std::size_t nv = n();
  Rational c = param.body.coefficient(unit_index(nv, l));
  if (c == 0) throw InvariantViolation("parameter has no linear term in its slot");
  Series u = scale(param, Rational(1) / c);
  SubstitutionMap sigma = invert_etale_change(nv, l, u, T);

  bool identity = u.body == Polynomial::variable(nv, l);
  if (!identity) {
    for (auto& g : gens) g = substitute(g, sigma);
    for (auto& im : back.images) im = substitute(im, sigma);
    back.T = std::min(back.T, sigma.T);
    SubstitutionMap fwd;
    fwd.images = coordinates;
    fwd.T = Series::kExact;
    for (const auto& c2 : coordinates) fwd.T = std::min(fwd.T, c2.T);
    coordinates[l] = substitute(u, fwd);
  }
  if (l != target) {
    for (auto& g : gens) g.body = g.body.swapped(l, target);
    for (auto& im : back.images) im.body = im.body.swapped(l, target);
    std::swap(coordinates[l], coordinates[target]);
  }
  ++epoch;
}

namespace {

// Inverse of a small square rational matrix; nullopt when singular.
std::optional<std::vector<std::vector<Rational>>> inverse(std::vector<std::vector<Rational>> A) {
  const std::size_t k = A.size();
  std::vector<std::vector<Rational>> inv(k, std::vector<Rational>(k, 0));
  for (std::size_t i = 0; i < k; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && A[piv][c] == 0) ++piv;
    if (piv == k) return std::nullopt;
    std::swap(A[piv], A[c]);
    std::swap(inv[piv], inv[c]);
    Rational d = A[c][c];
    for (std::size_t j = 0; j < k; ++j) {
      A[c][j] /= d;
      inv[c][j] /= d;
    }
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || A[r][c] == 0) continue;
      Rational f = A[r][c];
      for (std::size_t j = 0; j < k; ++j) {
        A[r][j] -= f * A[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

constexpr int kTailDegreeCap = 64;

}  // namespace

Frame::TailCheck Frame::tail_check(const std::vector<Series>& original, std::size_t k) const {
  TailCheck out;
  const std::size_t nv = n();
  if (k >= nv) {
    out.state = TailCheck::Zero;
    return out;
  }
  if (k == 0) return out;
  for (const auto& g : original)
    if (!g.exact()) return out;
  for (std::size_t i = 0; i < k; ++i)
    if (!coordinates[i].exact()) return out;

  // The remaining coordinates are original variables left in place by every change.
  std::vector<int> tail_index(nv, -1);
  for (std::size_t c = k; c < nv; ++c) {
    const Polynomial& p = coordinates[c].body;
    if (!coordinates[c].exact() || p.size() != 1 || p.total_degree() != 1 || p.terms().begin()->second != 1)
      return out;
    const MultiIndex& e = p.terms().begin()->first;
    tail_index[static_cast<std::size_t>(std::find(e.begin(), e.end(), 1) - e.begin())] = static_cast<int>(c - k);
  }
  std::vector<std::size_t> replaced;
  for (std::size_t s = 0; s < nv; ++s)
    if (tail_index[s] < 0) replaced.push_back(s);
  if (replaced.size() != k) return out;

  std::vector<std::vector<Rational>> A(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < k; ++r) A[i][r] = coordinates[i].body.coefficient(unit_index(nv, replaced[r]));
  auto Ainv = inverse(A);
  if (!Ainv) return out;

  long bound = 0;
  for (const auto& g : original) bound = std::max<long>(bound, g.body.total_degree());
  for (std::size_t i = 0; i < k; ++i) bound = std::min<long>(bound * coordinates[i].body.total_degree(), 1L << 20);
  const int D = static_cast<int>(std::min<long>(std::max<long>(bound, 1), kTailDegreeCap));

  // Solve params(X(y), y) = 0 for the replaced variables; each pass settles one more degree.
  const std::size_t m = nv - k;
  std::vector<Polynomial> images(nv, Polynomial(m));
  for (std::size_t s = 0; s < nv; ++s)
    if (tail_index[s] >= 0) images[s] = Polynomial::variable(m, static_cast<std::size_t>(tail_index[s]));
  for (int pass = 0; pass < D; ++pass) {
    const int t = pass + 1;
    std::vector<Polynomial> P;
    for (std::size_t i = 0; i < k; ++i) P.push_back(compose(coordinates[i].body, images, t));
    for (std::size_t r = 0; r < k; ++r) {
      Polynomial X = images[replaced[r]];
      for (std::size_t i = 0; i < k; ++i)
        if ((*Ainv)[r][i] != 0) X -= P[i] * (*Ainv)[r][i];
      images[replaced[r]] = X.truncated(t);
    }
  }

  int order = INT_MAX;
  for (const auto& g : original) order = std::min(order, compose(g.body, images, D).order());
  if (order != INT_MAX) {
    out.state = TailCheck::Nonzero;
    out.order = order;
  } else if (bound <= kTailDegreeCap) {
    out.state = TailCheck::Zero;
  }
  return out;
}

SubstitutionMap invert_coordinates(const std::vector<Series>& coordinates, int T) {
  const std::size_t n = coordinates.size();
  for (const auto& c : coordinates)
    if (!c.exact()) throw MathError("coordinate system is only known to finite order");
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < n; ++r) A[i][r] = coordinates[i].body.coefficient(unit_index(n, r));
  auto Ainv = inverse(A);
  if (!Ainv) throw MathError("coordinates are not independent at the point");
  std::vector<Polynomial> X;
  for (std::size_t r = 0; r < n; ++r) {
    Polynomial lin(n);
    for (std::size_t i = 0; i < n; ++i) lin.add_term(unit_index(n, i), (*Ainv)[r][i]);
    X.push_back(lin);
  }
  for (int t = 2; t <= T; ++t) {
    std::vector<Polynomial> err;
    for (std::size_t i = 0; i < n; ++i)
      err.push_back(compose(coordinates[i].body, X, t) - Polynomial::variable(n, i));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t i = 0; i < n; ++i)
        if ((*Ainv)[r][i] != 0) X[r] -= err[i] * (*Ainv)[r][i];
      X[r] = X[r].truncated(t);
    }
  }
  SubstitutionMap m;
  for (auto& x : X) m.images.emplace_back(std::move(x), T);
  m.T = T;
  return m;
}

MarkedCentre Frame::centre(const std::vector<std::string>& vars, const PointQ& point, const PreInvariant& inv) const {
  MarkedCentre J;
  J.vars = vars;
  J.base_point = point;
  J.inv = inv;
  J.marking = marking_of(inv);
  J.coordinates = coordinates;
  J.to_compatible = back;
  J.certified = exact();
  return J;
}

std::vector<Series> translated_generators(const std::vector<Polynomial>& gens, const PointQ& p) {
  std::vector<Series> out;
  bool nonzero = false;
  for (const auto& g : gens) {
    Polynomial t = translate_to_origin(g, p);
    if (t.constant_term() != 0) {
      if (t.order() == 0 && t.total_degree() == 0) throw MathError("unit ideal has no centre");
      throw MathError("point not on the variety");
    }
    nonzero = nonzero || !t.is_zero();
    out.emplace_back(t);
  }
  if (!nonzero) throw MathError("zero ideal has no centre");
  return out;
}

int max_degree(const std::vector<Series>& gens) {
  int d = 0;
  for (const auto& g : gens) d = std::max(d, g.body.total_degree());
  return d;
}

int admissibility_degree(const PreInvariant& a, std::size_t n, int max_generator_degree) {
  Rational sum = 0;
  for (const auto& q : a) sum += q;
  int need = static_cast<int>(ceil_of(sum).get_si());
  if (a.size() < n) need += static_cast<int>(a.size()) * max_generator_degree;
  return need;
}

int deepen(int T, const NeedDeeper& e) {
  if (e.shortfall > 0 && e.shortfall < T) return T + e.shortfall;
  return 2 * T;
}

int truncation_cap() {
  if (const char* env = std::getenv("WBU_TRUNC_CAP")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1024;
}

BigInt ceil_of(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

}  // namespace wbu
