#include "wbu/expr_io.hpp"

#include <cctype>
#include <sstream>

#include "wbu/errors.hpp"

namespace wbu {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

constexpr int kMaxExponent = 4096;

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  Polynomial run() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  const std::string& s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (peek('*')) {
      ++pos_;
      acc = acc * unary();
    }
    return acc;
  }

  Polynomial unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    std::size_t at = pos_;
    Polynomial e = power();
    if (e.total_degree() > 0) {
      pos_ = at;
      fail("non-integer exponent");
    }
    Rational v = e.constant_term();
    if (v.get_den() != 1 || v < 0 || v > kMaxExponent) {
      pos_ = at;
      fail("non-integer exponent");
    }
    return pow(base, static_cast<unsigned>(v.get_num().get_ui()));
  }

  Polynomial primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    std::size_t n = vars_.size();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string num = s_.substr(start, pos_ - start);
      std::string den = "1";
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::size_t ds = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == ds) fail("malformed literal");
        den = s_.substr(ds, pos_ - ds);
      }
      if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
        fail("malformed literal");
      BigInt d(den);
      if (d == 0) {
        pos_ = start;
        fail("malformed literal");
      }
      Rational q(BigInt(num), d);
      q.canonicalize();
      return Polynomial::constant(n, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < n; ++i)
        if (vars_[i] == id) return Polynomial::variable(n, i);
      pos_ = start;
      fail("unknown identifier '" + id + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }
};

}  // namespace

Polynomial parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  if (vars.empty()) throw ParseError("empty variable list", 0);
  return Parser(text, vars).run();
}

std::vector<std::string> parse_var_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string name = text.substr(start, comma - start);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    std::size_t lead = 0;
    while (lead < name.size() && std::isspace(static_cast<unsigned char>(name[lead]))) ++lead;
    name = name.substr(lead);
    if (!valid_identifier(name)) throw ParseError("invalid variable name '" + name + "'", start);
    for (const auto& v : out)
      if (v == name) throw ParseError("duplicate variable '" + name + "'", start);
    out.push_back(name);
    start = comma + 1;
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  bool neg = !t.empty() && t[0] == '-';
  std::string body = neg ? t.substr(1) : t;
  std::size_t slash = body.find('/');
  std::string num = body.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  auto digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (!digits(num) || !digits(den) || BigInt(den) == 0) throw ParseError("malformed literal '" + text + "'", 0);
  Rational q{BigInt(num), BigInt(den)};
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

PointQ parse_point(const std::string& text, std::size_t n) {
  PointQ p;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    try {
      p.push_back(parse_rational(text.substr(start, comma - start)));
    } catch (const ParseError&) {
      throw ParseError("malformed point coordinate", start);
    }
    start = comma + 1;
  }
  if (p.size() != n) throw ParseError("point has " + std::to_string(p.size()) + " coordinates, expected " + std::to_string(n), 0);
  return p;
}

nlohmann::json big_to_json(const BigInt& z) {
  if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
  return z.get_str();
}

nlohmann::json to_json(const ReportDocument& doc) {
  nlohmann::json j = nlohmann::json::object();
  for (auto it = doc.extra.begin(); it != doc.extra.end(); ++it) j[it.key()] = it.value();
  j["method"] = doc.method;
  nlohmann::json inv = nlohmann::json::array();
  for (const auto& a : doc.invariant) inv.push_back(to_string(a));
  j["invariant"] = inv;
  j["parameters"] = doc.parameters;
  nlohmann::json w = nlohmann::json::array();
  for (const auto& x : doc.weights) w.push_back(big_to_json(x));
  j["weights"] = w;
  j["marking"] = big_to_json(doc.marking);
  nlohmann::json pt = nlohmann::json::array();
  for (const auto& c : doc.point) pt.push_back(to_string(c));
  j["point"] = pt;
  if (doc.trace) j["trace"] = *doc.trace;
  return j;
}

std::string render_report(const ReportDocument& doc, bool json) {
  if (json) return to_json(doc).dump() + "\n";
  std::ostringstream os;
  os << "method: " << doc.method << "\n";
  os << "invariant: (";
  for (std::size_t i = 0; i < doc.invariant.size(); ++i) os << (i ? ", " : "") << to_string(doc.invariant[i]);
  os << ")\nweights: (";
  for (std::size_t i = 0; i < doc.weights.size(); ++i) os << (i ? ", " : "") << doc.weights[i].get_str();
  os << ")\nmarking: " << doc.marking.get_str() << "\nparameters:";
  for (const auto& p : doc.parameters) os << " [" << p << "]";
  os << "\n";
  for (auto it = doc.extra.begin(); it != doc.extra.end(); ++it) os << it.key() << ": " << it.value().dump() << "\n";
  return os.str();
}

std::string newton_svg(const std::vector<MultiIndex>& minimal, const std::vector<Rational>& preinv) {
  for (const auto& m : minimal)
    if (m.size() != 2) throw MathError("plot supports plane curves only");
  if (preinv.empty()) throw MathError("plot needs a nonempty invariant");
  const double scale = 40.0, pad = 50.0;
  double extent = 1;
  for (const auto& m : minimal) extent = std::max<double>(extent, std::max(m[0], m[1]));
  for (const auto& a : preinv) extent = std::max(extent, a.get_d());
  extent += 1;
  const double size = extent * scale + 2 * pad;
  auto X = [&](double u) { return pad + u * scale; };
  auto Y = [&](double v) { return size - pad - v * scale; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  os << "<title>Newton set and weighted hyperplanes</title>\n";
  os << "<g id=\"axes\" stroke=\"black\">\n";
  os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(extent) << "\" y2=\"" << Y(0) << "\"/>\n";
  os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\"" << Y(extent) << "\"/>\n";
  os << "</g>\n<g id=\"lattice\" fill=\"#bbbbbb\">\n";
  for (int u = 0; u <= static_cast<int>(extent); ++u)
    for (int v = 0; v <= static_cast<int>(extent); ++v)
      os << "<circle cx=\"" << X(u) << "\" cy=\"" << Y(v) << "\" r=\"1.5\"/>\n";
  os << "</g>\n<g id=\"dots\" fill=\"black\">\n";
  for (const auto& m : minimal)
    os << "<circle cx=\"" << X(m[0]) << "\" cy=\"" << Y(m[1]) << "\" r=\"5\"><title>(" << m[0] << "," << m[1]
       << ")</title></circle>\n";
  os << "</g>\n<g id=\"hyperplanes\" stroke=\"#c0392b\" stroke-width=\"2\">\n";
  const Rational& a1 = preinv[0];
  for (std::size_t j = 0; j < preinv.size(); ++j) {
    const Rational& b = preinv[j];
    os << "<line x1=\"" << X(a1.get_d()) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\"" << Y(b.get_d())
       << "\"><title>H" << (j + 1) << " intercepts (" << to_string(a1) << "," << to_string(b) << ")</title></line>\n";
  }
  os << "</g>\n<g id=\"labels\" font-family=\"sans-serif\" font-size=\"14\">\n";
  os << "<text x=\"" << X(a1.get_d()) << "\" y=\"" << Y(0) + 20 << "\">a1 = " << to_string(a1) << "</text>\n";
  const Rational& last = preinv.back();
  os << "<text x=\"" << X(0) - 45 << "\" y=\"" << Y(last.get_d()) << "\">a" << preinv.size() << " = "
     << to_string(last) << "</text>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace wbu
