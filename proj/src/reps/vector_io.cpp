#include "f4v/reps/vector_io.hpp"

#include <cctype>

#include "f4v/exactalg/parse.hpp"

namespace f4v {

namespace {

struct RawAssignment {
  std::string label;
  std::string value;
  std::size_t pos;
};

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::vector<RawAssignment> split(std::string_view text, int& m) {
  std::size_t body = 0;
  auto semi = text.find(';');
  if (semi != std::string_view::npos) {
    std::string head = strip(text.substr(0, semi));
    if (head.rfind("m=", 0) != 0) throw ParseError("expected 'm=<m>;' header", 0);
    int given = 0;
    try {
      given = std::stoi(head.substr(2));
    } catch (const std::exception&) {
      throw ParseError("bad grading in header", 2);
    }
    if (m != 0 && m != given) throw ParseError("header m=" + std::to_string(given) + " conflicts with m=" + std::to_string(m), 0);
    m = given;
    body = semi + 1;
  }
  if (m == 0) throw ParseError("grading m not given", 0);
  if (!supported_m(m)) throw ParseError("unsupported m=" + std::to_string(m), 0);
  std::vector<RawAssignment> out;
  std::size_t start = body;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    std::string s = strip(item);
    if (!s.empty()) {
      std::size_t at = start;
      while (std::isspace(static_cast<unsigned char>(text[at]))) ++at;
      auto eq = s.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == s.size()) throw ParseError("expected label=value", at);
      out.push_back({s.substr(0, eq), s.substr(eq + 1), at});
    }
    start = comma + 1;
  }
  return out;
}

}  // namespace

FieldElem parse_field_value(std::string_view text, const FieldCtx& f) {
  static const Vars xvar = make_vars({"x"});
  IntPoly p = parse_poly(text, xvar);
  if (f.is_prime_field() && p.total_degree() > 0) throw ParseError("x is only meaningful in extension fields", 0);
  FieldElem acc = FieldElem::zero(f);
  for (const auto& [mono, c] : p.terms()) {
    FieldElem term = FieldElem::from_integer(f, c);
    if (mono.e[0] > 0) term = term * FieldElem::generator(f).pow(std::uint64_t{mono.e[0]});
    acc += term;
  }
  return acc;
}

FieldVector parse_field_vector(std::string_view text, int m, const FieldCtx& f) {
  auto items = split(text, m);
  FieldVector v = zero_vector(m, FieldElem::one(f));
  for (const auto& a : items) {
    std::size_t idx;
    try {
      idx = label_index(m, a.label);
    } catch (const std::invalid_argument&) {
      throw ParseError("unknown label '" + a.label + "'", a.pos);
    }
    try {
      v.entries[idx] = parse_field_value(a.value, f);
    } catch (const ParseError& e) {
      throw ParseError("bad value for '" + a.label + "': " + e.what(), a.pos);
    }
  }
  return v;
}

IntVector parse_int_vector(std::string_view text, int m) {
  auto items = split(text, m);
  IntVector v = zero_vector(m, Integer(0));
  for (const auto& a : items) {
    std::size_t idx;
    try {
      idx = label_index(m, a.label);
    } catch (const std::invalid_argument&) {
      throw ParseError("unknown label '" + a.label + "'", a.pos);
    }
    try {
      v.entries[idx] = Integer(a.value);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad integer for '" + a.label + "'", a.pos);
    }
  }
  return v;
}

SymVector parse_sym_vector(std::string_view text, int m) {
  auto items = split(text, m);
  const Vars& vars = label_vars(m);
  SymVector v = zero_vector(m, int_poly_zero(vars));
  for (const auto& a : items) {
    std::size_t idx;
    try {
      idx = label_index(m, a.label);
    } catch (const std::invalid_argument&) {
      throw ParseError("unknown label '" + a.label + "'", a.pos);
    }
    try {
      v.entries[idx] = parse_poly(a.value, vars);
    } catch (const ParseError& e) {
      throw ParseError("bad value for '" + a.label + "': " + e.what(), a.pos);
    }
  }
  return v;
}

template <class T>
std::string format_vector(const VmVector<T>& v) {
  std::string out;
  const auto& b = basis(v.m);
  for (std::size_t i = 0; i < v.entries.size(); ++i) {
    if (i) out += ", ";
    out += b[i].name + "=" + to_string(v.entries[i]);
  }
  return out;
}

template std::string format_vector(const VmVector<Integer>&);
template std::string format_vector(const VmVector<FieldElem>&);

}  // namespace f4v
