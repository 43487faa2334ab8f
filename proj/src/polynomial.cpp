#include "wbu/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "wbu/errors.hpp"

namespace wbu {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int degree(const MultiIndex& a) { return std::accumulate(a.begin(), a.end(), 0); }

bool divides(const MultiIndex& a, const MultiIndex& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

MultiIndex unit_index(std::size_t n, std::size_t i) {
  MultiIndex e(n, 0);
  e[i] = 1;
  return e;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex c(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

Polynomial Polynomial::constant(std::size_t n, const Rational& c) {
  Polynomial p(n);
  p.add_term(MultiIndex(n, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t i) {
  Polynomial p(n);
  p.add_term(unit_index(n, i), 1);
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& a, const Rational& c) {
  Polynomial p(a.size());
  p.add_term(a, c);
  return p;
}

void Polynomial::add_term(const MultiIndex& a, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const MultiIndex& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(MultiIndex(n_, 0)); }

int Polynomial::total_degree() const { return terms_.empty() ? -1 : degree(terms_.rbegin()->first); }

int Polynomial::order() const { return terms_.empty() ? INT_MAX : degree(terms_.begin()->first); }

int Polynomial::degree_in(std::size_t i) const {
  int d = -1;
  for (const auto& [a, c] : terms_) d = std::max(d, a[i]);
  return d;
}

Rational Polynomial::evaluate(const std::vector<Rational>& p) const {
  Rational sum = 0;
  for (const auto& [a, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < n_; ++i)
      for (int k = 0; k < a[i]; ++k) t *= p[i];
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::truncated(int T) const {
  if (T == INT_MAX || total_degree() <= T) return *this;
  Polynomial r(n_);
  for (const auto& [a, c] : terms_) {
    if (degree(a) > T) break;
    r.terms_.emplace_hint(r.terms_.end(), a, c);
  }
  return r;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial r(n_);
  for (const auto& [a, c] : terms_)
    if (degree(a) == d) r.terms_.emplace(a, c);
  return r;
}

Polynomial Polynomial::slice(std::size_t i, int k) const {
  Polynomial r(n_);
  for (const auto& [a, c] : terms_) {
    if (a[i] != k) continue;
    MultiIndex b = a;
    b[i] = 0;
    r.terms_.emplace(std::move(b), c);
  }
  return r;
}

Polynomial Polynomial::restrict_zero(const std::vector<std::size_t>& killed) const {
  Polynomial r(n_);
  for (const auto& [a, c] : terms_) {
    bool keep = true;
    for (auto i : killed) keep = keep && a[i] == 0;
    if (keep) r.terms_.emplace_hint(r.terms_.end(), a, c);
  }
  return r;
}

Polynomial Polynomial::with_inserted_var(std::size_t slot) const {
  Polynomial r(n_ + 1);
  for (const auto& [a, c] : terms_) {
    MultiIndex b = a;
    b.insert(b.begin() + static_cast<long>(slot), 0);
    r.terms_.emplace(std::move(b), c);
  }
  return r;
}

Polynomial Polynomial::permuted(const std::vector<std::size_t>& perm) const {
  Polynomial r(n_);
  for (const auto& [a, c] : terms_) {
    MultiIndex b(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) b[perm[i]] = a[i];
    r.terms_.emplace(std::move(b), c);
  }
  return r;
}

Polynomial Polynomial::swapped(std::size_t a, std::size_t b) const {
  if (a == b) return *this;
  std::vector<std::size_t> perm(n_);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[a], perm[b]);
  return permuted(perm);
}

Polynomial Polynomial::dropped_var(std::size_t slot) const {
  Polynomial r(n_ - 1);
  for (const auto& [a, c] : terms_) {
    if (a[slot] != 0) throw InvariantViolation("dropped variable still occurs");
    MultiIndex b = a;
    b.erase(b.begin() + static_cast<long>(slot));
    r.terms_.emplace(std::move(b), c);
  }
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (n_ == 0 && terms_.empty()) n_ = o.n_;
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (n_ == 0 && terms_.empty()) n_ = o.n_;
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [a, v] : r.terms_) v = -v;
  return r;
}

bool Polynomial::operator<(const Polynomial& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  GrlexLess less;
  for (; i != terms_.end() && j != o.terms_.end(); ++i, ++j) {
    if (i->first != j->first) return less(i->first, j->first);
    if (i->second != j->second) return i->second < j->second;
  }
  return i == terms_.end() && j != o.terms_.end();
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational lc = terms_.rbegin()->second;
  Polynomial r = *this;
  r *= Rational(1) / lc;
  return r;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

namespace {

// Exponent vectors packed into one word when every product exponent fits in its lane.
bool packable(const Polynomial& a, const Polynomial& b, unsigned& bits) {
  const std::size_t n = a.nvars();
  if (n == 0 || n > 16) return false;
  bits = static_cast<unsigned>(64 / n);
  std::vector<int> ma(n, 0), mb(n, 0);
  for (const auto& [e, c] : a.terms())
    for (std::size_t i = 0; i < n; ++i) ma[i] = std::max(ma[i], e[i]);
  for (const auto& [e, c] : b.terms())
    for (std::size_t i = 0; i < n; ++i) mb[i] = std::max(mb[i], e[i]);
  for (std::size_t i = 0; i < n; ++i)
    if (static_cast<std::uint64_t>(ma[i] + mb[i]) >= (std::uint64_t{1} << (bits - 1))) return false;
  return true;
}

std::uint64_t pack(const MultiIndex& e, unsigned bits) {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < e.size(); ++i) k |= static_cast<std::uint64_t>(e[i]) << (bits * i);
  return k;
}

}  // namespace

Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, int T) {
  Polynomial r(std::max(a.nvars(), b.nvars()));
  if (a.is_zero() || b.is_zero()) return r;
  const std::size_t n = r.nvars();
  unsigned bits = 0;
  if (a.nvars() == b.nvars() && packable(a, b, bits)) {
    struct Packed {
      std::uint64_t key;
      int deg;
      const Rational* coef;
    };
    auto flatten = [&](const Polynomial& p) {
      std::vector<Packed> v;
      v.reserve(p.size());
      for (const auto& [e, c] : p.terms()) v.push_back({pack(e, bits), degree(e), &c});
      return v;
    };
    const std::vector<Packed> pa = flatten(a), pb = flatten(b);
    std::unordered_map<std::uint64_t, Rational> acc;
    acc.reserve(std::min<std::size_t>(pa.size() * pb.size(), 1u << 16));
    Rational prod;
    for (const auto& x : pa) {
      for (const auto& y : pb) {
        if (T != INT_MAX && x.deg + y.deg > T) break;  // pb is sorted by degree
        mpq_mul(prod.get_mpq_t(), x.coef->get_mpq_t(), y.coef->get_mpq_t());
        acc[x.key + y.key] += prod;
      }
    }
    const std::uint64_t mask = (bits == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
    MultiIndex e(n);
    for (const auto& [key, c] : acc) {
      if (c == 0) continue;
      for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<int>((key >> (bits * i)) & mask);
      r.add_term(e, c);
    }
    return r;
  }
  MultiIndex s(n);
  for (const auto& [ea, ca] : a.terms()) {
    int da = degree(ea);
    for (const auto& [eb, cb] : b.terms()) {
      if (T != INT_MAX && da + degree(eb) > T) break;  // terms of b are sorted by degree
      for (std::size_t i = 0; i < n; ++i) s[i] = ea[i] + eb[i];
      r.add_term(s, ca * cb);
    }
  }
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return mul_truncated(a, b, INT_MAX); }

Polynomial pow(const Polynomial& a, unsigned e, int T) {
  Polynomial result = Polynomial::constant(a.nvars(), 1);
  Polynomial base = a.truncated(T);
  while (e > 0) {
    if (e & 1u) result = mul_truncated(result, base, T);
    e >>= 1u;
    if (e > 0) base = mul_truncated(base, base, T);
  }
  return result;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t i) {
  Polynomial r(f.nvars());
  for (const auto& [a, c] : f.terms()) {
    if (a[i] == 0) continue;
    MultiIndex b = a;
    b[i] -= 1;
    r.add_term(b, c * a[i]);
  }
  return r;
}

Polynomial iterated_derivative(const Polynomial& f, const MultiIndex& beta) {
  // Direct formula: each monomial x^a contributes a!/(a-beta)! x^(a-beta).
  Polynomial r(f.nvars());
  for (const auto& [a, c] : f.terms()) {
    if (!divides(beta, a)) continue;
    Rational k = c;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (int t = 0; t < beta[i]; ++t) k *= a[i] - t;
    r.add_term(a - beta, k);
  }
  return r;
}

Polynomial compose(const Polynomial& f, const std::vector<Polynomial>& images, int T) {
  if (images.size() != f.nvars()) throw MathError("incomplete substitution");
  std::size_t m = images.empty() ? 0 : images.front().nvars();
  Polynomial result(m);
  // Cache powers per variable.
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) powers[i].push_back(Polynomial::constant(m, 1));
  auto power = [&](std::size_t i, int k) -> const Polynomial& {
    while (static_cast<int>(powers[i].size()) <= k)
      powers[i].push_back(mul_truncated(powers[i].back(), images[i], T));
    return powers[i][k];
  };
  for (const auto& [a, c] : f.terms()) {
    Polynomial t = Polynomial::constant(m, c);
    for (std::size_t i = 0; i < a.size() && !t.is_zero(); ++i)
      if (a[i] > 0) t = mul_truncated(t, power(i, a[i]), T);
    result += t;
  }
  return result;
}

Polynomial translate_to_origin(const Polynomial& f, const std::vector<Rational>& p) {
  const std::size_t n = f.nvars();
  bool zero = std::all_of(p.begin(), p.end(), [](const Rational& q) { return q == 0; });
  if (zero) return f;
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(n, i) + Polynomial::constant(n, p[i]));
  return compose(f, images);
}

IndexSet monomial_support(const Polynomial& f) {
  IndexSet s;
  for (const auto& [a, c] : f.terms()) s.insert(a);
  return s;
}

std::string render(const Polynomial& f, const std::vector<std::string>& vars) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [a, c] = *it;
    Rational mag = abs(c);
    bool neg = c < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars.at(i);
      if (a[i] > 1) mono += "^" + std::to_string(a[i]);
    }
    std::string coef = mag.get_den() == 1 ? mag.get_num().get_str() : mag.get_str();
    if (mono.empty())
      out += coef;
    else if (mag == 1)
      out += mono;
    else
      out += coef + "*" + mono;
  }
  return out;
}

}  // namespace wbu
