#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "wbu/atw.hpp"
#include "wbu/bench.hpp"
#include "wbu/blowup.hpp"
#include "wbu/errors.hpp"
#include "wbu/expr_io.hpp"
#include "wbu/method_one.hpp"
#include "wbu/method_two.hpp"
#include "wbu/newton.hpp"
#include "wbu/validate.hpp"

using namespace wbu;

namespace {

enum Exit { kOk = 0, kFailed = 1, kParse = 2, kMath = 3, kInternal = 4 };

struct Config {
  std::string vars = "x,y,z";
  std::vector<std::string> ideal;
  std::string point;
  std::string method = "2";
  std::string format = "json";
  std::string out;
  std::size_t max_steps = 10;
  std::vector<std::string> samples;
  std::size_t fuzz = 1000;
  std::uint64_t seed = 42;
  std::string mutate;
  std::string suite = "paper";
  bool full = false;
  bool parallel = false;
};

struct Problem {
  std::vector<std::string> vars;
  std::vector<Polynomial> gens;
  PointQ point;
};

Problem load(const Config& c) {
  Problem p;
  p.vars = parse_var_list(c.vars);
  if (c.ideal.empty()) throw ParseError("missing --ideal", 0);
  for (const auto& s : c.ideal) p.gens.push_back(parse_poly(s, p.vars));
  p.point = c.point.empty() ? PointQ(p.vars.size(), 0) : parse_point(c.point, p.vars.size());
  return p;
}

// A parameter given in translated coordinates, written back in the user's coordinates.
std::string render_param(const Series& s, const Problem& p) {
  const std::size_t n = p.vars.size();
  std::vector<Polynomial> shift;
  for (std::size_t i = 0; i < n; ++i)
    shift.push_back(Polynomial::variable(n, i) - Polynomial::constant(n, p.point[i]));
  std::string text = render(compose(s.body, shift), p.vars);
  if (!s.exact()) text += " + O(deg " + std::to_string(s.T + 1) + ")";
  return text;
}

nlohmann::json big_or_factorial(const BigInt& z) {
  std::string f = factorial_form(z);
  return f == z.get_str() ? big_to_json(z) : nlohmann::json(f);
}

std::string cmd_centre(const Config& c, bool with_details) {
  Problem p = load(c);
  ReportDocument doc;
  doc.method = c.method;
  doc.point = p.point;
  if (c.method == "atw") {
    AtwResult r = atw_centre(p.vars, p.gens, p.point, c.full ? AtwMode::Full : AtwMode::OrderOnly);
    doc.invariant = r.a;
    Marking m = marking_of(r.a);
    doc.weights = m.weights;
    doc.marking = m.d;
    nlohmann::json b = nlohmann::json::array();
    for (const auto& x : r.b) b.push_back(big_or_factorial(x));
    doc.extra["b"] = b;
    doc.extra["mode"] = c.full ? "full" : "order-only";
    doc.extra["work"] = big_or_factorial(r.work);
    for (const auto& s : r.params) doc.parameters.push_back(render_param(s, p));
    if (with_details) doc.trace = r.trace;
  } else if (c.method == "1" || c.method == "2") {
    CentreResult r = c.method == "1" ? associated_centre_m1(p.vars, p.gens, p.point)
                                     : associated_centre_m2(p.vars, p.gens, p.point);
    doc.invariant = r.centre.inv;
    doc.weights = r.centre.marking.weights;
    doc.marking = r.centre.marking.d;
    for (const auto& s : r.centre.params()) doc.parameters.push_back(render_param(s, p));
    doc.extra["work"] = r.work;
    doc.extra["certified"] = r.centre.certified;
    if (with_details) doc.trace = trace_to_json(r.trace);
  } else {
    throw ParseError("unknown method '" + c.method + "'", 0);
  }
  if (!with_details) doc.parameters.clear();
  return render_report(doc, c.format == "json");
}

std::string cmd_blowup(const Config& c) {
  Problem p = load(c);
  CentreResult r = associated_centre_m2(p.vars, p.gens, p.point);
  std::vector<Polynomial> compat = to_compatible_exact(r.centre, translated_generators(p.gens, p.point));
  nlohmann::json charts = nlohmann::json::array();
  std::ostringstream text;
  text << "centre " << inv_to_string(r.centre.inv) << "\n";
  for (std::size_t i = 0; i < r.centre.k(); ++i) {
    ChartData ch = chart_substitution(r.centre, i);
    auto transform = proper_transform(compat, r.centre, ch);
    nlohmann::json j;
    j["chart"] = i + 1;
    j["vars"] = ch.new_vars;
    j["stabilizer_order"] = big_to_json(ch.stabilizer_order);
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : transform) gens.push_back(render(g, ch.new_vars));
    j["ideal"] = gens;
    charts.push_back(j);
    text << "chart " << i + 1 << " (mu_" << ch.stabilizer_order.get_str() << "):";
    for (const auto& g : gens) text << " " << g.get<std::string>();
    text << "\n";
  }
  if (c.format != "json") return text.str();
  nlohmann::json inv = nlohmann::json::array();
  for (const auto& q : r.centre.inv) inv.push_back(to_string(q));
  nlohmann::json w = nlohmann::json::array();
  for (const auto& x : r.centre.marking.weights) w.push_back(big_to_json(x));
  return nlohmann::json{{"invariant", inv}, {"weights", w}, {"charts", charts}}.dump() + "\n";
}

void text_tree(const ResolutionNode& n, int depth, std::ostringstream& os) {
  os << std::string(2 * depth, ' ') << "[";
  for (std::size_t i = 0; i < n.gens.size(); ++i) os << (i ? ", " : "") << render(n.gens[i], n.vars);
  os << "] maxinv " << (n.maxinv ? inv_to_string(*n.maxinv) : std::string("none")) << " (" << n.regime << ")";
  if (!n.note.empty()) os << " " << n.note;
  if (n.truncated) os << " truncated";
  os << "\n";
  for (const auto& c : n.children) text_tree(c, depth + 1, os);
}

std::string cmd_resolve(const Config& c) {
  Problem p = load(c);
  ResolveOptions opts;
  opts.max_steps = c.max_steps;
  for (const auto& s : c.samples) opts.samples.push_back(parse_point(s, p.vars.size()));
  ResolutionTrace t = resolve(p.vars, p.gens, opts);
  if (c.format == "json") return trace_to_json(t).dump() + "\n";
  std::ostringstream os;
  os << t.message << " after " << t.steps << " step(s)\n";
  text_tree(t.root, 0, os);
  return os.str();
}

std::string cmd_newton_svg(const Config& c) {
  Problem p = load(c);
  CentreResult r = associated_centre_m1(p.vars, p.gens, p.point);
  NewtonSet N = newton_set(translated_generators(p.gens, p.point), p.vars.size());
  return newton_svg(N.minimal, r.centre.inv);
}

void emit(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw MathError("cannot write " + c.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants, centres and weighted blow-ups of singular affine schemes"};
  app.require_subcommand(1);
  Config c;

  auto add_problem = [&](CLI::App* sub) {
    sub->add_option("--vars", c.vars, "Comma-separated variable names");
    sub->add_option("--ideal", c.ideal, "Generator (repeatable)")->required();
    sub->add_option("--point", c.point, "Base point, comma separated rationals");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", c.out, "Write the report to a file");
  };

  auto* inv = app.add_subcommand("invariant", "Invariant of the associated centre at a point");
  auto* centre = app.add_subcommand("centre", "Associated marked centre with parameters and trace");
  for (auto* sub : {inv, centre}) {
    add_problem(sub);
    add_common(sub);
    sub->add_option("--method", c.method)->check(CLI::IsMember({"1", "2", "atw"}));
    sub->add_flag("--full", c.full, "Baseline only: expand powered ideals instead of tracking orders");
  }
  auto* blowup = app.add_subcommand("blowup", "Charts of the weighted blow-up at the associated centre");
  add_problem(blowup);
  add_common(blowup);
  auto* res = app.add_subcommand("resolve", "Repeated blow-ups with a decrease check on every edge");
  add_problem(res);
  add_common(res);
  res->add_option("--max-steps", c.max_steps)->check(CLI::PositiveNumber);
  res->add_option("--samples", c.samples, "Extra inspected point (repeatable)");
  auto* bench = app.add_subcommand("bench", "Compare methods and kernels on a fixed suite");
  add_common(bench);
  bench->add_option("--suite", c.suite);
  bench->add_flag("--parallel", c.parallel, "Run cases concurrently");
  auto* val = app.add_subcommand("validate", "Run the property suites");
  add_common(val);
  val->add_option("--fuzz", c.fuzz, "Samples per suite")->check(CLI::PositiveNumber);
  val->add_option("--seed", c.seed);
  val->add_option("--mutate", c.mutate, "Inject a known bug (xi-sign) to check the suites catch it");
  val->add_flag("--parallel", c.parallel, "Run samples concurrently");
  auto* svg = app.add_subcommand("newton-svg", "Newton set picture of a plane curve");
  add_problem(svg);
  svg->add_option("--out", c.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (inv->parsed()) {
      emit(c, cmd_centre(c, false));
    } else if (centre->parsed()) {
      emit(c, cmd_centre(c, true));
    } else if (blowup->parsed()) {
      emit(c, cmd_blowup(c));
    } else if (res->parsed()) {
      emit(c, cmd_resolve(c));
    } else if (bench->parsed()) {
      auto policy = c.parallel ? kernels::Policy::Parallel : kernels::Policy::Serial;
      auto rows = run_bench(bench_suite(c.suite), policy);
      auto timings = kernel_timings(3);
      emit(c, c.format == "json" ? bench_json(rows, timings).dump(2) + "\n" : bench_table(rows, timings));
    } else if (val->parsed()) {
      ValidateOptions v;
      v.samples = c.fuzz;
      v.seed = c.seed;
      v.mutate = c.mutate;
      v.policy = c.parallel ? kernels::Policy::Parallel : kernels::Policy::Serial;
      auto results = run_validation(v);
      emit(c, c.format == "json" ? validation_to_json(results).dump() + "\n" : validation_to_text(results));
      for (const auto& r : results)
        if (!r.passed()) return kFailed;
    } else if (svg->parsed()) {
      emit(c, cmd_newton_svg(c));
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMath;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
