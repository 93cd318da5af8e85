#include "convcode/io.hpp"

#include <cctype>
#include <fstream>

#include "convcode/errors.hpp"

namespace convcode {

namespace {

// Recursive-descent parser over the grammar
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*
//   factor := atom ['^' INT]
//   atom   := INT | 'a' [INT] | 'z' | '(' expr ')'
class PolyParser {
 public:
  PolyParser(const Field& f, std::string_view text) : f_(f), s_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  Poly expr() {
    skip_space();
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = s_[pos_++] == '-';
    Poly acc = term();
    if (negate) acc = -acc;
    while (true) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      acc = c == '+' ? acc + term() : acc - term();
    }
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      skip_space();
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '(' || c == 'a' || c == 'z' || std::isdigit(static_cast<unsigned char>(c))) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base = atom();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const unsigned long e = integer();
      Poly r = Poly::constant(f_, 1);
      for (unsigned long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Poly atom() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (c == 'z') {
      ++pos_;
      return Poly::z(f_);
    }
    if (c == 'a') {
      if (f_.extension_degree() == 1) fail("'a' denotes a generator of an extension field, but the field is prime");
      ++pos_;
      unsigned long e = 1;
      if (std::isdigit(static_cast<unsigned char>(peek()))) e = integer();
      return Poly::constant(f_, f_.pow(f_.alpha(), e));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(f_, f_.from_int(static_cast<long long>(integer())));
    fail(c ? std::string("unexpected '") + c + "'" : "unexpected end of input");
  }

  unsigned long integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse polynomial \"" + std::string(s_) + "\" at position " + std::to_string(pos_) + ": " +
                     what);
  }

  const Field& f_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

Poly entry_from_json(const Field& f, const nlohmann::json& e) {
  if (e.is_string()) return parse_poly(f, e.get<std::string>());
  if (e.is_number_integer()) {
    const auto v = e.get<long long>();
    if (v < 0 || v >= static_cast<long long>(f.order())) throw ParseError("element code out of range");
    return Poly::constant(f, static_cast<Elem>(v));
  }
  if (!e.is_array()) throw ParseError("matrix entry must be a coefficient list or a polynomial string");
  std::vector<Elem> coeffs;
  for (const auto& c : e) {
    if (!c.is_number_integer()) throw ParseError("coefficient must be an integer element code");
    const auto v = c.get<long long>();
    if (v < 0 || v >= static_cast<long long>(f.order()))
      throw ParseError("coefficient " + std::to_string(v) + " is not an element code of GF(" +
                       std::to_string(f.order()) + ")");
    coeffs.push_back(static_cast<Elem>(v));
  }
  return Poly(f, coeffs);
}

}  // namespace

Elem parse_element(const Field& f, std::string_view text) {
  const Poly p = parse_poly(f, text);
  if (p.degree() > 0) throw ParseError("\"" + std::string(text) + "\" is not a field element");
  return p.coeff(0);
}

Poly parse_poly(const Field& f, std::string_view text) { return PolyParser(f, text).parse(); }

PolyMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("encoder file must be a JSON object");
  if (!j.contains("field") || !j["field"].is_object()) throw ParseError("encoder file lacks a \"field\" object");
  const auto& fj = j["field"];
  if (!fj.contains("p") || !fj["p"].is_number_unsigned()) throw ParseError("field.p must be a positive integer");
  const unsigned m = fj.contains("m") ? fj["m"].get<unsigned>() : 1;
  const Field* f = nullptr;
  try {
    f = &Field::get(fj["p"].get<unsigned>(), m);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid field: ") + e.what());
  }
  if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].empty())
    throw ParseError("encoder file has no rows");
  const auto& rows = j["rows"];
  const std::size_t n = rows[0].is_array() ? rows[0].size() : 0;
  if (n == 0) throw ParseError("encoder rows must be non-empty arrays");
  PolyMatrix out(*f, rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw ParseError("encoder rows must have equal length");
    for (std::size_t c = 0; c < n; ++c) out(i, c) = entry_from_json(*f, rows[i][c]);
  }
  return out;
}

nlohmann::json field_to_json(const Field& f) { return {{"p", f.characteristic()}, {"m", f.extension_degree()}}; }

nlohmann::json matrix_to_json(const PolyMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).coeffs());
    rows.push_back(row);
  }
  return {{"field", field_to_json(m.field())}, {"rows", rows}};
}

PolyMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return matrix_from_json(j);
}

nlohmann::json wam_to_json(const WAM& w) {
  const Field& f = w.field();
  nlohmann::json states = nlohmann::json::array();
  for (std::size_t s = 0; s < w.size(); ++s) states.push_back(vector_at(f, w.delta(), s));
  nlohmann::json grid = nlohmann::json::array();
  for (std::size_t x = 0; x < w.size(); ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t y = 0; y < w.size(); ++y) row.push_back(w(x, y).to_string());
    grid.push_back(row);
  }
  return {{"field", field_to_json(f)}, {"delta", w.delta()}, {"states", states}, {"entries", grid}};
}

}  // namespace convcode
