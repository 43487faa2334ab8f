#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace wbu {

using Rational = mpq_class;
using BigInt = mpz_class;

std::string to_string(const Rational& q);  // always "p/q"

// Rational or the sentinel +infinity.
struct ExtRational {
  bool infinite = true;
  Rational value;

  static ExtRational inf() { return {}; }
  static ExtRational of(const Rational& q) { return {false, q}; }
  bool operator==(const ExtRational& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
  bool operator<(const ExtRational& o) const {
    if (infinite) return false;
    if (o.infinite) return true;
    return value < o.value;
  }
  bool operator<=(const ExtRational& o) const { return !(o < *this); }
  std::string str() const { return infinite ? std::string("inf") : to_string(value); }
};

using MultiIndex = std::vector<int>;

int degree(const MultiIndex& a);
bool divides(const MultiIndex& a, const MultiIndex& b);  // a <= b componentwise
MultiIndex unit_index(std::size_t n, std::size_t i);
MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);

// Graded, then lexicographic on the entry vector.
struct GrlexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

using IndexSet = std::set<MultiIndex, GrlexLess>;

class Polynomial {
 public:
  using Terms = std::map<MultiIndex, Rational, GrlexLess>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : n_(nvars) {}

  static Polynomial constant(std::size_t n, const Rational& c);
  static Polynomial variable(std::size_t n, std::size_t i);
  static Polynomial monomial(const MultiIndex& a, const Rational& c = 1);

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const MultiIndex& a, const Rational& c);
  Rational coefficient(const MultiIndex& a) const;
  Rational constant_term() const;

  int total_degree() const;  // -1 for zero
  int order() const;         // lowest total degree, INT_MAX for zero
  int degree_in(std::size_t i) const;

  Rational evaluate(const std::vector<Rational>& p) const;
  Polynomial truncated(int T) const;  // drop terms of degree > T
  Polynomial homogeneous_part(int d) const;

  // Coefficient of x_i^k viewed as polynomial in the remaining variables (slot i zeroed).
  Polynomial slice(std::size_t i, int k) const;
  // Substitute 0 for each listed variable.
  Polynomial restrict_zero(const std::vector<std::size_t>& killed) const;
  // Insert a new unused variable at the given slot.
  Polynomial with_inserted_var(std::size_t slot) const;
  Polynomial permuted(const std::vector<std::size_t>& perm) const;  // new slot perm[i] <- old slot i
  Polynomial swapped(std::size_t a, std::size_t b) const;
  Polynomial dropped_var(std::size_t slot) const;  // slot must not occur

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }
  bool operator<(const Polynomial& o) const;  // deterministic total order for dedup

  // Leading term in grlex (largest key).
  const MultiIndex& leading_index() const { return terms_.rbegin()->first; }
  Polynomial monic() const;  // scaled so the grlex-leading coefficient is 1

 private:
  std::size_t n_ = 0;
  Terms terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Rational& c);
Polynomial operator*(const Rational& c, Polynomial a);
// Product with all terms of degree > T discarded (T = INT_MAX means exact).
Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, int T);
Polynomial pow(const Polynomial& a, unsigned e, int T = INT_MAX);

Polynomial partial_derivative(const Polynomial& f, std::size_t i);
Polynomial iterated_derivative(const Polynomial& f, const MultiIndex& beta);
Polynomial translate_to_origin(const Polynomial& f, const std::vector<Rational>& p);
IndexSet monomial_support(const Polynomial& f);

// Exact composition f(images[0], ..., images[n-1]); images share a target ring.
Polynomial compose(const Polynomial& f, const std::vector<Polynomial>& images, int T = INT_MAX);

std::string render(const Polynomial& f, const std::vector<std::string>& vars);

}  // namespace wbu
