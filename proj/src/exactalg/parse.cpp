#include "f4v/exactalg/parse.hpp"

#include <cctype>

namespace f4v {

namespace {

class Parser {
 public:
  Parser(std::string_view s, const Vars& vars) : s_(s), vars_(vars) {}

  IntPoly run() {
    IntPoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  IntPoly expr() {
    skip_ws();
    IntPoly acc = int_poly_zero(vars_);
    bool neg = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      neg = true;
    }
    IntPoly t = term();
    acc = neg ? acc - t : acc + t;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  IntPoly term() {
    IntPoly acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= power();
      } else if (starts_factor()) {
        acc *= power();
      } else {
        break;
      }
    }
    return acc;
  }

  IntPoly power() {
    IntPoly base = atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      unsigned long e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(s_[pos_] - '0');
        if (e > 255) throw ParseError("exponent too large", start);
        ++pos_;
      }
      if (pos_ == start) throw ParseError("expected exponent", pos_);
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  IntPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      IntPoly r = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return int_poly_const(vars_, Integer(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_++;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_->size(); ++i) {
        if ((*vars_)[i] == name) return IntPoly::variable(vars_, Integer(1), i);
      }
      throw ParseError("unknown variable '" + name + "'", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  const Vars& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPoly parse_poly(std::string_view text, const Vars& vars) { return Parser(text, vars).run(); }

IntPoly exact_div_int(const IntPoly& p, const Integer& c) {
  if (sgn(c) == 0) throw std::domain_error("exact division by zero");
  std::vector<IntPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [m, x] : p.terms()) {
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    if (sgn(r) != 0) {
      IntPoly single = IntPoly::from_terms(p.vars(), p.unit(), {{m, x}});
      throw NotDivisible("term " + single.to_string() + " is not divisible by " + c.get_str());
    }
    out.push_back({m, q});
  }
  return IntPoly::from_terms(p.vars(), p.unit(), std::move(out));
}

FieldPoly reduce_poly(const IntPoly& p, const FieldCtx& f) {
  std::vector<FieldPoly::Term> out;
  out.reserve(p.size());
  for (const auto& [m, x] : p.terms()) out.push_back({m, FieldElem::from_integer(f, x)});
  return FieldPoly::from_terms(p.vars(), FieldElem::one(f), std::move(out));
}

}  // namespace f4v
