#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wbu/weighting.hpp"

namespace wbu {

enum class AtwMode { Full, OrderOnly };

struct PoweredIdealSum {
  std::vector<std::vector<Series>> ideals;
  std::vector<BigInt> exponents;
  AtwMode mode = AtwMode::OrderOnly;

  // Order at the origin: min over summands of exponent * ord; nullopt for the zero ideal.
  std::optional<BigInt> order() const;
};

constexpr long kExponentCap = 64;

// Summands (D^{<=i} I, b!/(b-i)) for i < b. Full mode refuses exponents above the cap.
PoweredIdealSum coefficient_ideal(const std::vector<Series>& gens, int b, AtwMode mode, long cap = kExponentCap);

// (D^{<=i} I)|_{V(x_kill)} computed from coefficient slices, differentiating only in `free_slots`.
std::vector<Series> restricted_derivative_ideal(const std::vector<Series>& gens, int i, std::size_t kill,
                                                const std::vector<std::size_t>& free_slots);

// Same summands as coefficient_ideal, already restricted to V(x_kill).
PoweredIdealSum restricted_coefficient_ideal(const std::vector<Series>& gens, int b, std::size_t kill,
                                             const std::vector<std::size_t>& free_slots, AtwMode mode,
                                             long cap = kExponentCap);

// Generators of Σ K_i^{e_i}; only valid when every exponent is within the cap.
std::vector<Series> materialize(const PoweredIdealSum& P, long cap = kExponentCap);

// Drops generators lying in the monomial ideal spanned by the monomial generators, and repeats.
std::vector<Series> reduce_monomial_generators(const std::vector<Series>& gens);

struct AtwResult {
  std::vector<BigInt> b;
  PreInvariant a;
  std::vector<Series> params;  // in original (translated) coordinates
  BigInt work;                 // sum of all coefficient-ideal exponents formed
  nlohmann::json trace = nlohmann::json::array();
};

AtwResult atw_centre(const std::vector<std::string>& vars, const std::vector<Polynomial>& gens, const PointQ& p,
                     AtwMode mode, long cap = kExponentCap);

BigInt simplex_size(const PreInvariant& a);
Rational sigma_bound(const PreInvariant& a);

// "36*29!" style rendering for large integers with a big factorial factor; plain decimal otherwise.
std::string factorial_form(const BigInt& z);

}  // namespace wbu
