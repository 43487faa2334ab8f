#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wbu/series.hpp"

namespace wbu {

// Grammar: sums of products of signed powers; '^' binds tightest and associates to the right,
// unary minus sits between '^' and '*'. Only numeric literals may contain '/'.
Polynomial parse_poly(const std::string& text, const std::vector<std::string>& vars);

// "a,b,c" -> names; validates identifiers and distinctness.
std::vector<std::string> parse_var_list(const std::string& text);
// "0,1/2,-3" -> rationals.
PointQ parse_point(const std::string& text, std::size_t n);
Rational parse_rational(const std::string& text);

struct ReportDocument {
  std::string method;
  std::vector<Rational> invariant;
  std::vector<std::string> parameters;
  std::vector<BigInt> weights;
  BigInt marking = 1;
  PointQ point;
  std::optional<nlohmann::json> trace;
  nlohmann::json extra = nlohmann::json::object();  // merged at top level
};

nlohmann::json to_json(const ReportDocument& doc);
std::string render_report(const ReportDocument& doc, bool json = true);

// JSON-friendly integer: a number when it fits in 64 bits, else its decimal string.
nlohmann::json big_to_json(const BigInt& z);

std::string newton_svg(const std::vector<MultiIndex>& minimal, const std::vector<Rational>& preinv);

}  // namespace wbu
