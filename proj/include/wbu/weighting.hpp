#pragma once

#include <string>
#include <vector>

#include "wbu/series.hpp"

namespace wbu {

// Non-decreasing positive rationals. The empty sequence stands for the zero centre ().
using PreInvariant = std::vector<Rational>;

Rational delta(const PreInvariant& a, const MultiIndex& beta);
ExtRational xi(const PreInvariant& a, const MultiIndex& beta);

struct Marking {
  BigInt d;
  std::vector<BigInt> weights;
};
Marking marking_of(const PreInvariant& a);

// Lexicographic with +inf padding: a proper prefix is the larger value.
int compare_inv(const PreInvariant& u, const PreInvariant& v);
std::string inv_to_string(const PreInvariant& a);

bool gamma_member(const PreInvariant& a);

// Centre data at a base point. Coordinates are taken after translating the base point to the origin.
struct MarkedCentre {
  std::vector<std::string> vars;
  PointQ base_point;
  PreInvariant inv;
  Marking marking;
  // n coordinate functions of the compatible system, as series in the original coordinates.
  // The first k of them are the parameters.
  std::vector<Series> coordinates;
  // Original coordinates expressed in the compatible system.
  SubstitutionMap to_compatible;
  bool certified = true;

  std::size_t k() const { return inv.size(); }
  std::size_t n() const { return vars.size(); }
  std::vector<Series> params() const { return {coordinates.begin(), coordinates.begin() + static_cast<long>(k())}; }
};

// Centre whose parameters are the listed coordinate slots (in that order) of the original variables.
MarkedCentre coordinate_centre(const std::vector<std::string>& vars, const PointQ& point, const PreInvariant& inv,
                               const std::vector<std::size_t>& slots);

struct Valuation {
  ExtRational value;
  bool certified = true;
};

// v_J on a series already written in compatible coordinates.
Valuation valuation_compatible(const PreInvariant& a, const Series& g);
// v_J of f given in the original (translated) coordinates.
Valuation valuation(const MarkedCentre& J, const Series& f);
// d * v_J, the filtration degree.
ExtRational valuation_F(const MarkedCentre& J, const Series& f);

// Minimal exponent vectors (over the k parameters) of monomials with weighted degree >= j.
std::vector<MultiIndex> filtration_piece(const MarkedCentre& J, long j);

// Generators in the original (translated) coordinates.
bool is_admissible(const MarkedCentre& J, const std::vector<Series>& gens);

bool compatible_check(const MarkedCentre& J, const std::vector<Series>& candidates);

MarkedCentre b_completion(const MarkedCentre& J, const Rational& b);

}  // namespace wbu
