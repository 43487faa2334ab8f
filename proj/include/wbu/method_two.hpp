#pragma once

#include <map>
#include <optional>
#include <vector>

#include "wbu/kernels.hpp"
#include "wbu/method_one.hpp"

namespace wbu {

// D^{<=m} of a generator set, differentiating in the listed slots only (others are known to be absent).
std::vector<Series> derive_ideal(const std::vector<Series>& gens, int m, const std::vector<std::size_t>& slots,
                                 std::size_t& touched, kernels::Policy policy = kernels::default_policy());
Ideal derive_ideal(const Ideal& I, int m);

std::vector<Series> restrict_to_coordinate_slice(const std::vector<Series>& gens, const std::vector<std::size_t>& killed);
Ideal restrict_to_coordinate_slice(const Ideal& I, const std::vector<std::size_t>& killed);

// Order at the origin of the ideal generated by `gens`, when it can be certified.
struct OrderInfo {
  bool zero = false;       // every generator vanishes identically (exactly)
  bool certain = true;     // false when truncation hides the answer
  int order = INT_MAX;     // valid when !zero && certain
  int lower_bound = 0;     // always a valid lower bound
};
OrderInfo ideal_order(const std::vector<Series>& gens);

// Memoised D[β] for the generators of one coordinate frame. A new frame needs a new cache.
class DBracket {
 public:
  DBracket(const std::vector<Series>& gens, std::size_t n, kernels::Policy policy);

  const std::vector<Series>& get(const MultiIndex& beta);
  // D[β]|_{V(x_l)} with l = length of β.
  std::vector<Series> restricted(const MultiIndex& beta);
  // Builds every D[β] in the list level by level, running independent prefixes concurrently.
  void prefetch(const std::vector<MultiIndex>& betas);

  std::size_t touched() const;  // derivative polynomials formed so far

 private:
  struct Tower {
    std::vector<Series> base;
    std::vector<std::size_t> free_slots;
    std::vector<std::vector<Series>> layers;
    std::size_t touched = 0;
  };
  Tower& tower(const MultiIndex& prefix);
  void extend(Tower& t, int m);

  std::vector<Series> gens_;
  std::size_t n_;
  kernels::Policy policy_;
  std::map<MultiIndex, Tower> towers_;
  std::map<MultiIndex, std::vector<Series>> brackets_;
};

// Multi-indices of length j with β_i < a_i and Δ < 1, grlex sorted.
std::vector<MultiIndex> simplex_indices(const PreInvariant& a);

struct M2State {
  CentreSearchState search;
  std::optional<DBracket> cache;
  int cache_epoch = -1;
  std::size_t touched = 0;
  kernels::Policy policy = kernels::Policy::Serial;

  DBracket& brackets();
};

// Least-index generator with a nonzero linear part in slots >= from; returns it and the slot.
std::pair<Series, std::size_t> maximal_contact(const std::vector<Series>& D, std::size_t from);

std::optional<XiWitness> next_entry_m2(M2State& state);
bool admissible_m2(M2State& state);
CentreResult associated_centre_m2(const std::vector<std::string>& vars, const std::vector<Polynomial>& gens,
                                  const PointQ& p, kernels::Policy policy = kernels::default_policy());

}  // namespace wbu
