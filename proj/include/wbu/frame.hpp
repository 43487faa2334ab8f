#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "wbu/weighting.hpp"

namespace wbu {

// Thrown inside a search when the working truncation cannot certify the next decision.
// `shortfall` is how many more degrees would have settled it, or 0 when unknown.
struct NeedDeeper : std::runtime_error {
  explicit NeedDeeper(const std::string& what, int shortfall = 0) : std::runtime_error(what), shortfall(shortfall) {}
  int shortfall;
};

// Next working truncation after a failed attempt at T.
int deepen(int T, const NeedDeeper& e);

// A point-local coordinate system reached from the original (translated) coordinates by a chain
// of étale changes, together with the ideal's generators rewritten in it.
struct Frame {
  std::vector<Series> gens;         // generators in current coordinates
  std::vector<Series> coordinates;  // current coordinates as series in the original ones
  SubstitutionMap back;             // original coordinates as series in the current ones
  int epoch = 0;

  static Frame start(const std::vector<Series>& gens, std::size_t n);
  std::size_t n() const { return coordinates.size(); }
  bool exact() const;

  // Normalise `param` (in current coordinates, nonzero x_l-linear coefficient), make it the
  // coordinate in slot l, then move that slot to `target`.
  void adopt_parameter(const Series& param, std::size_t l, std::size_t target, int T);

  // Restriction of the original generators to V(first k coordinates), computed exactly in the
  // untouched tail variables. Only possible when those k coordinates are exact polynomials.
  struct TailCheck {
    enum State { Unknown, Zero, Nonzero } state = Unknown;
    int order = 0;  // lowest degree of a surviving term when Nonzero
  };
  TailCheck tail_check(const std::vector<Series>& original, std::size_t k) const;

  MarkedCentre centre(const std::vector<std::string>& vars, const PointQ& point, const PreInvariant& inv) const;
};

// Original coordinates as series in the given ones, correct up to degree T. Needs exact coordinates.
SubstitutionMap invert_coordinates(const std::vector<Series>& coordinates, int T);

// Translates generators to the origin, validating the point and the ideal.
std::vector<Series> translated_generators(const std::vector<Polynomial>& gens, const PointQ& p);

// Truncation needed before a truncated frame may declare the partial centre admissible.
// With all n coordinates used as parameters the weighted simplex is bounded by total degree
// ⌈Σa⌉. Otherwise monomials in the remaining coordinates can sit at any degree. Pure tail terms
// are handled by Frame::tail_check; for mixed terms we add a margin of (number of parameters) ×
// (largest generator degree), which is a heuristic rather than a proven bound.
int max_degree(const std::vector<Series>& gens);
int admissibility_degree(const PreInvariant& a, std::size_t n, int max_generator_degree);

// Reads the deepening cap: WBU_TRUNC_CAP when set, else 1024.
int truncation_cap();

BigInt ceil_of(const Rational& q);

}  // namespace wbu
