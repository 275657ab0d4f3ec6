#pragma once

// Function-spec DSL:
//
//   spec    := name '(' [ param { ',' param } ] ')'
//   param   := key '=' value
//   value   := complex | '[' [ complex { ',' complex } ] ']'
//   complex := number | number 'i' | number ('+'|'-') unsigned-number 'i'
//   number  := ['+'|'-'] digits ['.' digits] [('e'|'E') ['+'|'-'] digits]
//
// Whitespace is allowed between tokens but not inside a complex literal.
// Examples: koebe(theta=0), g_lambda(lambda=0.5), rational(num=[0,1], den=[1,-2,1]),
// exact_u(lambda=0.5, a2=1.5, psi=[-1]).

#include <cctype>
#include <charconv>
#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "logcoef/atlas.hpp"

namespace logcoef {

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : s_(text) {}

  FunctionSpec parse() {
    skip_ws();
    const std::size_t name_pos = pos_;
    const std::string name = ident();
    if (name.empty()) fail("expected a function name");
    expect('(');
    skip_ws();
    if (peek() != ')') {
      for (;;) {
        skip_ws();
        const std::size_t key_pos = pos_;
        std::string key = ident();
        if (key.empty()) fail("expected a parameter name");
        expect('=');
        skip_ws();
        Param p;
        p.pos = pos_;
        if (peek() == '[') {
          p.value = list();
        } else {
          p.value = complex_literal();
        }
        if (!params_.emplace(key, std::move(p)).second) fail("duplicate parameter '" + key + "'", key_pos);
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect(')');
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters after ')'");
    return build(name, name_pos);
  }

 private:
  struct Param {
    std::variant<cplx, poly::Coeffs> value;
    std::size_t pos = 0;
    bool used = false;
  };

  [[noreturn]] void fail(const std::string& msg, std::size_t at = SpecError::npos) const {
    const std::size_t where = at == SpecError::npos ? pos_ : at;
    throw SpecError(SpecErrc::syntax, "spec parse error at position " + std::to_string(where) + ": " + msg,
                    where);
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string ident() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  double number(bool allow_sign = true) {
    const std::size_t start = pos_;
    std::size_t p = pos_;
    if (allow_sign && p < s_.size() && (s_[p] == '+' || s_[p] == '-')) ++p;
    const std::size_t digits_start = p;
    while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
    bool digits = p > digits_start;
    if (p < s_.size() && s_[p] == '.') {
      ++p;
      const std::size_t frac = p;
      while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
      digits = digits || p > frac;
    }
    if (!digits) fail("expected a decimal number", start);
    if (p < s_.size() && (s_[p] == 'e' || s_[p] == 'E')) {
      std::size_t q = p + 1;
      if (q < s_.size() && (s_[q] == '+' || s_[q] == '-')) ++q;
      const std::size_t exp_start = q;
      while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) ++q;
      if (q == exp_start) fail("malformed exponent", p);
      p = q;
    }
    std::string_view tok = s_.substr(start, p - start);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) fail("malformed number", start);
    pos_ = p;
    return v;
  }

  cplx complex_literal() {
    const double a = number();
    if (peek() == 'i') {
      ++pos_;
      return {0.0, a};
    }
    if (peek() == '+' || peek() == '-') {
      const double sign = peek() == '-' ? -1.0 : 1.0;
      ++pos_;
      const double b = number(false);
      if (peek() != 'i') fail("expected 'i' after the imaginary part");
      ++pos_;
      return {a, sign * b};
    }
    return {a, 0.0};
  }

  poly::Coeffs list() {
    expect('[');
    poly::Coeffs out;
    skip_ws();
    if (peek() == ']') {
      ++pos_;
      return out;
    }
    for (;;) {
      skip_ws();
      out.push_back(complex_literal());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(']');
      return out;
    }
  }

  Param& take(const std::string& key) {
    auto it = params_.find(key);
    if (it == params_.end()) fail("missing parameter '" + key + "'", name_end_);
    it->second.used = true;
    return it->second;
  }
  bool has(const std::string& key) const { return params_.count(key) != 0; }

  cplx complex_param(const std::string& key) {
    Param& p = take(key);
    if (auto* c = std::get_if<cplx>(&p.value)) return *c;
    fail("parameter '" + key + "' must be a number", p.pos);
  }
  double real_param(const std::string& key) {
    const std::size_t at = params_.count(key) ? params_.at(key).pos : name_end_;
    const cplx c = complex_param(key);
    if (c.imag() != 0.0) fail("parameter '" + key + "' must be real", at);
    return c.real();
  }
  int int_param(const std::string& key) {
    const std::size_t at = params_.count(key) ? params_.at(key).pos : name_end_;
    const double v = real_param(key);
    if (v != std::floor(v) || std::abs(v) > 1e9) fail("parameter '" + key + "' must be an integer", at);
    return static_cast<int>(v);
  }
  poly::Coeffs list_param(const std::string& key) {
    Param& p = take(key);
    if (auto* l = std::get_if<poly::Coeffs>(&p.value)) return *l;
    fail("parameter '" + key + "' must be a list", p.pos);
  }

  FunctionSpec build(const std::string& name, std::size_t name_pos) {
    using namespace family;
    name_end_ = name_pos;
    FunctionSpec::Variant v;
    if (name == "koebe") v = Koebe{has("theta") ? real_param("theta") : 0.0};
    else if (name == "g_lambda") v = GLambda{real_param("lambda")};
    else if (name == "f_lambda") v = FLambda{real_param("lambda")};
    else if (name == "f0") v = F0{};
    else if (name == "f1") v = F1{};
    else if (name == "g_family") v = GFamily{int_param("n")};
    else if (name == "k_alpha") v = KAlpha{real_param("alpha")};
    else if (name == "half_plane") v = HalfPlane{};
    else if (name == "rational") v = Rational{list_param("num"), list_param("den")};
    else if (name == "schwarz_superset") v = SchwarzSuperset{real_param("lambda"), list_param("omega")};
    else if (name == "exact_u") v = ExactU{real_param("lambda"), complex_param("a2"), list_param("psi")};
    else fail("unknown function '" + name + "'", name_pos);
    for (const auto& [key, p] : params_)
      if (!p.used) fail("unknown parameter '" + key + "' for " + name, p.pos);
    return FunctionSpec::make(std::move(v));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t name_end_ = 0;
  std::map<std::string, Param> params_;
};

}  // namespace detail

/// Parses and validates a spec; throws SpecError (syntax errors carry a position).
inline FunctionSpec parse_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

}  // namespace logcoef
