#include "nambu/parser.hpp"

#include <cctype>

#include "nambu/errors.hpp"

namespace nambu {

namespace {

class Parser {
 public:
  Parser(const std::string& src, const ParamEnv& env) : src_(src), env_(env) {}

  ExpPoly run() {
    ExpPoly e = expr();
    skip_ws();
    if (pos_ != src_.size()) throw SyntaxError("trailing input", pos_);
    return e;
  }

 private:
  const std::string& src_;
  const ParamEnv& env_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExpPoly expr() {
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    ExpPoly acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  ExpPoly term() {
    ExpPoly acc = factor();
    while (true) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        size_t at = pos_;
        ExpPoly d = factor();
        if (d.is_zero()) throw SyntaxError("division by zero", at);
        if (!d.is_unit())
          throw SyntaxError(
              "division only by nonzero constants and exponential units", at);
        acc = acc.div_unit(d);
      } else {
        break;
      }
    }
    return acc;
  }

  ExpPoly factor() {
    ExpPoly base = primary();
    if (accept('^')) {
      size_t at = pos_;
      bool neg = accept('-');
      long k = integer();
      if (neg) {
        if (!base.is_unit())
          throw SyntaxError("negative power of a non-unit", at);
        base = ExpPoly::constant(1).div_unit(base);
      }
      return base.pow(static_cast<unsigned>(k));
    }
    return base;
  }

  long integer() {
    skip_ws();
    size_t at = pos_;
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      throw SyntaxError("expected integer", at);
    long v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + (src_[pos_] - '0');
      if (v > 1000000000L) throw SyntaxError("integer literal too large", at);
      ++pos_;
    }
    if (pos_ < src_.size() && src_[pos_] == '.')
      throw SyntaxError("floating literals are rejected; use p/q", pos_);
    return v;
  }

  ExpPoly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      ExpPoly e = expr();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return e;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return ExpPoly::constant(Rat(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return ident();
    throw SyntaxError("unexpected character", pos_);
  }

  ExpPoly ident() {
    size_t at = pos_;
    std::string name;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      name += src_[pos_++];
    if (name == "exp" || name == "sin" || name == "cos") {
      if (!accept('(')) throw SyntaxError("expected '(' after " + name, pos_);
      ExpPoly arg = expr();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return apply_func(name, arg, at);
    }
    if (name.size() >= 2 && name[0] == 'x' &&
        name.find_first_not_of("0123456789", 1) == std::string::npos) {
      long axis = std::stol(name.substr(1));
      if (axis < 1 || axis > kMaxAxes)
        throw UnknownSymbol("coordinate out of range: " + name);
      return ExpPoly::coordinate(static_cast<int>(axis - 1));
    }
    if (pos_ < src_.size() && src_[pos_] == '(')
      throw UnknownSymbol("unknown function: " + name);
    auto it = env_.find(name);
    if (it != env_.end()) return ExpPoly::constant(it->second);
    return ExpPoly::parameter(name);
  }

  // Decomposes a linear-in-coordinates argument into per-axis affine forms.
  std::vector<std::pair<int, AffForm>> linear_form(const ExpPoly& arg, size_t at) {
    std::vector<AffForm> forms(kMaxAxes);
    for (const auto& t : arg.terms()) {
      if (!t.freq.empty())
        throw SyntaxError("nested exponential in exp/sin/cos argument", at);
      if (t.powers.size() == 1 && t.powers[0].second == 1) {
        int axis = t.powers[0].first;
        if (t.params.empty()) {
          forms[axis].c0 += t.coeff;
        } else if (t.params.size() == 1 && t.params[0].second == 1) {
          AffForm add;
          add.lin.emplace_back(t.params[0].first, t.coeff);
          forms[axis] = forms[axis] + add;
        } else {
          throw SyntaxError("argument not affine in parameters", at);
        }
      } else if (t.powers.empty()) {
        throw SyntaxError("constant offset in exp/sin/cos argument", at);
      } else {
        throw SyntaxError("argument not linear in coordinates", at);
      }
    }
    std::vector<std::pair<int, AffForm>> out;
    for (int a = 0; a < kMaxAxes; ++a)
      if (!forms[a].is_zero()) out.emplace_back(a, forms[a]);
    return out;
  }

  ExpPoly exp_of(const std::vector<std::pair<int, AffForm>>& form,
                 const GaussRat& scale) {
    ExpPoly e = ExpPoly::constant(1);
    for (const auto& [axis, f] : form)
      e *= ExpPoly::exponential(axis, f * scale);
    return e;
  }

  ExpPoly apply_func(const std::string& name, const ExpPoly& arg, size_t at) {
    auto form = linear_form(arg, at);
    if (name == "exp") return exp_of(form, GaussRat(1));
    // sin/cos require a real argument
    for (const auto& [axis, f] : form) {
      if (f.c0.im != 0) throw SyntaxError("complex trig argument", at);
      for (const auto& [p, c] : f.lin)
        if (c.im != 0) throw SyntaxError("complex trig argument", at);
    }
    ExpPoly plus = exp_of(form, gauss_i());
    ExpPoly minus = exp_of(form, -gauss_i());
    Rat half(1, 2);
    if (name == "cos")
      return ExpPoly::constant(GaussRat(half)) * (plus + minus);
    // sin = (e^{iu} - e^{-iu}) / (2i) = -i/2 e^{iu} + i/2 e^{-iu}
    return ExpPoly::constant(GaussRat(Rat(0), Rat(-1) * half)) * plus +
           ExpPoly::constant(GaussRat(Rat(0), half)) * minus;
  }
};

}  // namespace

ExpPoly parse(const std::string& src, const ParamEnv& env) {
  return Parser(src, env).run();
}

}  // namespace nambu
