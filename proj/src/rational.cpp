#include "nambu/rational.hpp"

namespace nambu {

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw Error("empty rational literal");
  std::string t = text;
  if (t.find('.') != std::string::npos)
    throw Error("floating literal rejected, use p/q: " + text);
  try {
    Rat r(t);
    r.canonicalize();
    if (r.get_den() == 0) throw Error("zero denominator: " + text);
    return r;
  } catch (const std::invalid_argument&) {
    throw Error("bad rational literal: " + text);
  }
}

std::string rat_str(const Rat& r) { return r.get_str(); }

int compare(const Rat& a, const Rat& b) { return cmp(a, b); }

int compare(const GaussRat& a, const GaussRat& b) {
  if (int c = cmp(a.re, b.re)) return c;
  return cmp(a.im, b.im);
}

std::string gauss_str(const GaussRat& g) {
  if (g.im == 0) return g.re.get_str();
  std::string s = "(" + g.re.get_str();
  s += (g.im > 0 ? "+" : "-");
  Rat ai = abs(g.im);
  s += ai.get_str() + "i)";
  return s;
}

}  // namespace nambu
