#pragma once

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "wbu/polynomial.hpp"

namespace wbu {

// A power series known up to total degree T. T == kExact marks an honest polynomial.
struct Series {
  static constexpr int kExact = INT_MAX;

  Polynomial body;
  int T = kExact;

  Series() = default;
  Series(Polynomial p, int t = kExact) : body(t == kExact ? std::move(p) : p.truncated(t)), T(t) {}

  bool exact() const { return T == kExact; }
  std::size_t nvars() const { return body.nvars(); }
  // Zero as far as we can tell.
  bool is_zero() const { return body.is_zero(); }
  // ord is certain when some term of degree <= T survives.
  int order() const { return body.order(); }
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series scale(const Series& a, const Rational& c);
Series derivative(const Series& f, std::size_t i);
Series derivative(const Series& f, const MultiIndex& gamma);
Series restrict_zero(const Series& f, const std::vector<std::size_t>& killed);

// images[i] is the image of source variable i, all in one target ring.
struct SubstitutionMap {
  std::vector<Series> images;
  int T = Series::kExact;  // min over images

  static SubstitutionMap identity(std::size_t n);
  std::size_t source_vars() const { return images.size(); }
  bool exact() const { return T == Series::kExact; }
};

// f∘s truncated at min(f.T, s.T). Images must vanish at the origin when f is truncated.
Series substitute(const Series& f, const SubstitutionMap& s);
Series substitute(const Polynomial& f, const SubstitutionMap& s);

// Given a new parameter u with nonzero x_l-linear coefficient, returns σ expressing the old
// coordinate x_l in the new system where u replaces x_l, so that u∘σ = x_l up to degree T.
SubstitutionMap invert_etale_change(std::size_t nvars, std::size_t slot, const Series& new_param, int T);

using PointQ = std::vector<Rational>;

struct Ideal {
  std::vector<std::string> vars;
  std::vector<Series> gens;
  std::optional<PointQ> base_point;

  std::size_t nvars() const { return vars.size(); }
  bool exact() const;
  int precision() const;  // min T over generators
  int max_degree() const;
};

// Drop zero generators and repeats up to scalar multiples; order is preserved otherwise.
std::vector<Series> prune_generators(const std::vector<Series>& gens);

std::vector<std::string> default_var_names(std::size_t n);

}  // namespace wbu
