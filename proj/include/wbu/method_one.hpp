#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wbu/frame.hpp"
#include "wbu/newton.hpp"

namespace wbu {

struct StepRecord {
  Rational entry;
  MultiIndex witness;
  std::size_t slot = 0;       // coordinate that was replaced by the new parameter
  std::size_t generator = 0;  // index of the generator it was derived from
  int truncation = 0;         // working truncation (INT_MAX when everything stayed polynomial)
};

nlohmann::json trace_to_json(const std::vector<StepRecord>& trace);

struct CentreSearchState {
  std::vector<std::string> vars;
  PointQ point;
  std::vector<Series> original;  // translated generators
  Frame frame;
  PreInvariant partial;
  int T = 0;
  std::vector<StepRecord> trace;
};

struct CentreResult {
  MarkedCentre centre;
  std::vector<StepRecord> trace;
  std::size_t work = 0;  // method-specific counter
};

CentreSearchState start_state(const std::vector<std::string>& vars, const std::vector<Polynomial>& gens,
                              const PointQ& p);
CentreSearchState start_state_at(const std::vector<std::string>& vars, const std::vector<Polynomial>& gens,
                                 const PointQ& p, int T);

// One step: returns the finished centre, or nullopt after appending an entry to the state.
// Throws NeedDeeper when the state's truncation cannot certify the decision.
std::optional<MarkedCentre> step(CentreSearchState& state);

CentreResult associated_centre_m1(const std::vector<std::string>& vars, const std::vector<Polynomial>& gens,
                                  const PointQ& p);

// Test oracle: the largest b for which the b-completion of the current partial centre is admissible.
Rational bcompletion_oracle(const CentreSearchState& state);

}  // namespace wbu
