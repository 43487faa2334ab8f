#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wbu/weighting.hpp"

namespace wbu {

// One chart of the weighted blow-up, written in the centre's compatible coordinates.
// Slot i carries the exceptional coordinate s; the other slots keep their positions.
struct ChartData {
  std::size_t index = 0;
  SubstitutionMap substitution;  // compatible coordinate -> chart coordinates
  BigInt stabilizer_order;       // w_i, the order of the μ_{w_i} acting on the chart
  std::vector<BigInt> weights;
  std::vector<std::string> new_vars;
};

// A name per compatible coordinate: the original name when it is a plain variable, u<i> otherwise.
std::vector<std::string> compatible_names(const MarkedCentre& J);

ChartData chart_substitution(const MarkedCentre& J, std::size_t i);

// Expresses translated generators in compatible coordinates; requires an exact coordinate system.
std::vector<Polynomial> to_compatible_exact(const MarkedCentre& J, const std::vector<Series>& gens);

// Substitutes and divides by s^{v(g)} exactly. Generators are in compatible coordinates.
std::vector<Polynomial> proper_transform(const std::vector<Polynomial>& gens, const MarkedCentre& J,
                                         const ChartData& chart);

// Character bookkeeping for μ_{w_i}: true when every monomial of h carries the residue v mod w_i.
bool mu_character_consistent(const Polynomial& h, const ChartData& chart, const BigInt& v);

// Sum of the lowest-weight monomials of f (f in compatible coordinates).
Polynomial initial_form(const Polynomial& f, const PreInvariant& a);

bool check_initialisation_invariance(const std::vector<std::string>& vars, const std::vector<Polynomial>& gens,
                                     const PointQ& p);

struct ResolutionNode {
  std::vector<std::string> vars;
  std::vector<Polynomial> gens;
  std::optional<PreInvariant> maxinv;  // none when no inspected point lies on the chart
  std::string regime;                  // "inspected" or "certified-smooth"
  std::size_t inspected = 0;
  std::optional<PointQ> centre_point;
  std::optional<MarkedCentre> centre;
  std::vector<std::size_t> chart_of_child;
  std::vector<ResolutionNode> children;
  bool truncated = false;  // step budget ran out here
  std::string note;
};

struct ResolutionTrace {
  ResolutionNode root;
  std::size_t steps = 0;
  bool complete = true;
  std::string message;
};

struct ResolveOptions {
  std::size_t max_steps = 10;
  std::vector<PointQ> samples;  // inspected on the root chart
  int grid_radius = 2;
};

ResolutionTrace resolve(const std::vector<std::string>& vars, const std::vector<Polynomial>& gens,
                        const ResolveOptions& opts = {});

// Walks the tree and checks strict decrease of maxinv along every edge.
bool verify_decrease(const ResolutionNode& node);
nlohmann::json trace_to_json(const ResolutionTrace& t);

bool is_smooth_invariant(const PreInvariant& a);

}  // namespace wbu
