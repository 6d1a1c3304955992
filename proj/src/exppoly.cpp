#include "nambu/exppoly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "nambu/errors.hpp"

namespace nambu {

// ---------------------------------------------------------------- AffForm

AffForm AffForm::conj() const {
  AffForm r;
  r.c0 = c0.conj();
  r.lin.reserve(lin.size());
  for (const auto& [p, c] : lin) r.lin.emplace_back(p, c.conj());
  return r;
}

AffForm operator+(const AffForm& a, const AffForm& b) {
  AffForm r;
  r.c0 = a.c0 + b.c0;
  auto ia = a.lin.begin(), ib = b.lin.begin();
  while (ia != a.lin.end() || ib != b.lin.end()) {
    if (ib == b.lin.end() || (ia != a.lin.end() && ia->first < ib->first)) {
      r.lin.push_back(*ia++);
    } else if (ia == a.lin.end() || ib->first < ia->first) {
      r.lin.push_back(*ib++);
    } else {
      GaussRat c = ia->second + ib->second;
      if (!c.is_zero()) r.lin.emplace_back(ia->first, c);
      ++ia, ++ib;
    }
  }
  return r;
}

AffForm operator-(const AffForm& a) { return a * GaussRat(-1); }

AffForm operator*(const AffForm& a, const GaussRat& s) {
  AffForm r;
  if (s.is_zero()) return r;
  r.c0 = a.c0 * s;
  r.lin.reserve(a.lin.size());
  for (const auto& [p, c] : a.lin) r.lin.emplace_back(p, c * s);
  return r;
}

bool operator==(const AffForm& a, const AffForm& b) {
  return a.c0 == b.c0 && a.lin == b.lin;
}

int compare(const AffForm& a, const AffForm& b) {
  if (int c = compare(a.c0, b.c0)) return c;
  size_t n = std::min(a.lin.size(), b.lin.size());
  for (size_t i = 0; i < n; ++i) {
    if (a.lin[i].first != b.lin[i].first)
      return a.lin[i].first < b.lin[i].first ? -1 : 1;
    if (int c = compare(a.lin[i].second, b.lin[i].second)) return c;
  }
  if (a.lin.size() != b.lin.size()) return a.lin.size() < b.lin.size() ? -1 : 1;
  return 0;
}

// ------------------------------------------------------------ ExpPolyTerm

unsigned ExpPolyTerm::degree() const {
  unsigned d = 0;
  for (const auto& [axis, e] : powers) d += e;
  return d;
}

unsigned ExpPolyTerm::power(int axis) const {
  for (const auto& [ax, e] : powers)
    if (ax == axis) return e;
  return 0;
}

const AffForm* ExpPolyTerm::freq_of(int axis) const {
  for (const auto& [ax, f] : freq)
    if (ax == axis) return &f;
  return nullptr;
}

// Graded-lex: total monomial degree, powers, freq (real parts before
// imaginary handled inside AffForm compare), then the parameter monomial.
int compare_key(const ExpPolyTerm& a, const ExpPolyTerm& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  if (a.powers != b.powers) return a.powers < b.powers ? -1 : 1;
  {
    size_t n = std::min(a.freq.size(), b.freq.size());
    for (size_t i = 0; i < n; ++i) {
      if (a.freq[i].first != b.freq[i].first)
        return a.freq[i].first < b.freq[i].first ? -1 : 1;
      if (int c = compare(a.freq[i].second, b.freq[i].second)) return c;
    }
    if (a.freq.size() != b.freq.size())
      return a.freq.size() < b.freq.size() ? -1 : 1;
  }
  if (a.params != b.params) return a.params < b.params ? -1 : 1;
  return 0;
}

// ---------------------------------------------------------------- ExpPoly

ExpPoly ExpPoly::normalized(std::vector<ExpPolyTerm> raw) {
  for (auto& t : raw) {
    std::sort(t.params.begin(), t.params.end());
    std::sort(t.powers.begin(), t.powers.end());
    std::sort(t.freq.begin(), t.freq.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::erase_if(t.freq, [](const auto& f) { return f.second.is_zero(); });
    std::erase_if(t.powers, [](const auto& p) { return p.second == 0; });
    std::erase_if(t.params, [](const auto& p) { return p.second == 0; });
  }
  std::sort(raw.begin(), raw.end(), [](const ExpPolyTerm& x, const ExpPolyTerm& y) {
    return compare_key(x, y) < 0;
  });
  ExpPoly out;
  for (auto& t : raw) {
    if (t.coeff.is_zero()) continue;
    if (!out.terms_.empty() && compare_key(out.terms_.back(), t) == 0) {
      out.terms_.back().coeff += t.coeff;
      if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

ExpPoly ExpPoly::from_terms(std::vector<ExpPolyTerm> terms) {
  return normalized(std::move(terms));
}

ExpPoly ExpPoly::constant(const GaussRat& c) {
  ExpPoly e;
  if (!c.is_zero()) {
    ExpPolyTerm t;
    t.coeff = c;
    e.terms_.push_back(std::move(t));
  }
  return e;
}

ExpPoly ExpPoly::coordinate(int axis) {
  if (axis < 0 || axis >= kMaxAxes) throw Error("axis out of range");
  ExpPolyTerm t;
  t.coeff = GaussRat(1);
  t.powers = {{axis, 1u}};
  ExpPoly e;
  e.terms_.push_back(std::move(t));
  return e;
}

ExpPoly ExpPoly::parameter(const std::string& name) {
  ExpPolyTerm t;
  t.coeff = GaussRat(1);
  t.params = {{name, 1u}};
  ExpPoly e;
  e.terms_.push_back(std::move(t));
  return e;
}

ExpPoly ExpPoly::exponential(int axis, const AffForm& form) {
  if (axis < 0 || axis >= kMaxAxes) throw Error("axis out of range");
  ExpPolyTerm t;
  t.coeff = GaussRat(1);
  if (!form.is_zero()) t.freq = {{axis, form}};
  ExpPoly e;
  e.terms_.push_back(std::move(t));
  return e;
}

bool ExpPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_[0].powers.empty() &&
         terms_[0].freq.empty() && terms_[0].params.empty();
}

ExpPoly ExpPoly::conj() const {
  std::vector<ExpPolyTerm> raw;
  raw.reserve(terms_.size());
  for (const auto& t : terms_) {
    ExpPolyTerm c = t;
    c.coeff = t.coeff.conj();
    for (auto& [axis, f] : c.freq) f = f.conj();
    raw.push_back(std::move(c));
  }
  return normalized(std::move(raw));
}

bool ExpPoly::is_real() const { return conj() == *this; }

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
  std::vector<ExpPolyTerm> raw = a.terms_;
  raw.insert(raw.end(), b.terms_.begin(), b.terms_.end());
  return ExpPoly::normalized(std::move(raw));
}

ExpPoly operator-(const ExpPoly& a) {
  std::vector<ExpPolyTerm> raw = a.terms_;
  for (auto& t : raw) t.coeff = -t.coeff;
  ExpPoly e;
  e.terms_ = std::move(raw);  // negation preserves order and nonzero-ness
  return e;
}

ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return a + (-b); }

static ExpPolyTerm mul_terms(const ExpPolyTerm& a, const ExpPolyTerm& b) {
  ExpPolyTerm r;
  r.coeff = a.coeff * b.coeff;
  // merge sorted param monomials
  auto ia = a.params.begin();
  for (const auto& p : b.params) {
    while (ia != a.params.end() && ia->first < p.first) r.params.push_back(*ia++);
    if (ia != a.params.end() && ia->first == p.first) {
      r.params.emplace_back(p.first, ia->second + p.second);
      ++ia;
    } else {
      r.params.push_back(p);
    }
  }
  r.params.insert(r.params.end(), ia, a.params.end());
  // powers add
  auto ja = a.powers.begin();
  for (const auto& p : b.powers) {
    while (ja != a.powers.end() && ja->first < p.first) r.powers.push_back(*ja++);
    if (ja != a.powers.end() && ja->first == p.first) {
      r.powers.emplace_back(p.first, ja->second + p.second);
      ++ja;
    } else {
      r.powers.push_back(p);
    }
  }
  r.powers.insert(r.powers.end(), ja, a.powers.end());
  // frequencies add
  auto ka = a.freq.begin();
  for (const auto& f : b.freq) {
    while (ka != a.freq.end() && ka->first < f.first) r.freq.push_back(*ka++);
    if (ka != a.freq.end() && ka->first == f.first) {
      AffForm s = ka->second + f.second;
      if (!s.is_zero()) r.freq.emplace_back(f.first, std::move(s));
      ++ka;
    } else {
      r.freq.push_back(f);
    }
  }
  r.freq.insert(r.freq.end(), ka, a.freq.end());
  return r;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  std::vector<ExpPolyTerm> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) raw.push_back(mul_terms(ta, tb));
  return ExpPoly::normalized(std::move(raw));
}

bool operator==(const ExpPoly& a, const ExpPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
    if (compare_key(a.terms_[i], b.terms_[i]) != 0) return false;
  }
  return true;
}

ExpPoly ExpPoly::pow(unsigned k) const {
  ExpPoly r = constant(1);
  ExpPoly base = *this;
  while (k) {
    if (k & 1u) r = r * base;
    base = base * base;
    k >>= 1u;
  }
  return r;
}

ExpPoly ExpPoly::differentiate(int axis) const {
  std::vector<ExpPolyTerm> raw;
  for (const auto& t : terms_) {
    unsigned k = t.power(axis);
    if (k > 0) {
      ExpPolyTerm d = t;
      d.coeff = t.coeff * GaussRat(Rat(k));
      for (auto& [ax, e] : d.powers)
        if (ax == axis) --e;
      raw.push_back(std::move(d));
    }
    if (const AffForm* f = t.freq_of(axis)) {
      // lambda = c0 + sum c_p p: each parameter piece lands in its own term
      if (!f->c0.is_zero()) {
        ExpPolyTerm d = t;
        d.coeff = t.coeff * f->c0;
        raw.push_back(std::move(d));
      }
      for (const auto& [p, c] : f->lin) {
        ExpPolyTerm d = t;
        d.coeff = t.coeff * c;
        bool found = false;
        for (auto& [name, e] : d.params)
          if (name == p) {
            ++e;
            found = true;
            break;
          }
        if (!found) d.params.emplace_back(p, 1u);
        raw.push_back(std::move(d));
      }
    }
  }
  return normalized(std::move(raw));
}

bool ExpPoly::is_unit() const {
  return terms_.size() == 1 && terms_[0].powers.empty() &&
         terms_[0].params.empty();
}

ExpPoly ExpPoly::div_unit(const ExpPoly& unit) const {
  if (!unit.is_unit())
    throw Error("division only by nonzero constants and exponential units");
  const ExpPolyTerm& u = unit.terms_[0];
  std::vector<ExpPolyTerm> raw = terms_;
  for (auto& t : raw) {
    t.coeff = t.coeff / u.coeff;
    for (const auto& [axis, f] : u.freq) {
      bool found = false;
      for (auto& [ax, g] : t.freq)
        if (ax == axis) {
          g = g + (-f);
          found = true;
          break;
        }
      if (!found) t.freq.emplace_back(axis, -f);
    }
  }
  return normalized(std::move(raw));
}

ExpPoly ExpPoly::at_origin() const {
  std::vector<ExpPolyTerm> raw;
  for (const auto& t : terms_) {
    if (!t.powers.empty()) continue;  // monomials vanish at 0
    ExpPolyTerm c = t;                // e^{lambda.0} = 1
    c.freq.clear();
    raw.push_back(std::move(c));
  }
  return normalized(std::move(raw));
}

ExpPoly ExpPoly::substitute_params(const ParamEnv& env) const {
  std::vector<ExpPolyTerm> raw;
  raw.reserve(terms_.size());
  for (const auto& t : terms_) {
    ExpPolyTerm s;
    s.coeff = t.coeff;
    s.powers = t.powers;
    for (const auto& [p, e] : t.params) {
      auto it = env.find(p);
      if (it == env.end()) {
        s.params.emplace_back(p, e);
      } else {
        Rat v(1);
        for (unsigned i = 0; i < e; ++i) v *= it->second;
        s.coeff *= GaussRat(v);
      }
    }
    if (s.coeff.is_zero()) continue;
    for (const auto& [axis, f] : t.freq) {
      AffForm g;
      g.c0 = f.c0;
      for (const auto& [p, c] : f.lin) {
        auto it = env.find(p);
        if (it == env.end())
          g.lin.emplace_back(p, c);
        else
          g.c0 += c * GaussRat(it->second);
      }
      if (!g.is_zero()) s.freq.emplace_back(axis, std::move(g));
    }
    raw.push_back(std::move(s));
  }
  return normalized(std::move(raw));
}

std::set<std::string> ExpPoly::params_used() const {
  std::set<std::string> out;
  for (const auto& t : terms_) {
    for (const auto& [p, e] : t.params) out.insert(p);
    for (const auto& [axis, f] : t.freq)
      for (const auto& [p, c] : f.lin) out.insert(p);
  }
  return out;
}

std::set<int> ExpPoly::axes_used() const {
  std::set<int> out;
  for (const auto& t : terms_) {
    for (const auto& [axis, e] : t.powers) out.insert(axis);
    for (const auto& [axis, f] : t.freq) out.insert(axis);
  }
  return out;
}

double ExpPoly::evaluate(std::span<const double> point,
                         const ParamEnv& env) const {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& t : terms_) {
    std::complex<double> v(t.coeff.re.get_d(), t.coeff.im.get_d());
    for (const auto& [p, e] : t.params) {
      auto it = env.find(p);
      if (it == env.end()) throw UnboundParameter(p);
      v *= std::pow(it->second.get_d(), static_cast<double>(e));
    }
    for (const auto& [axis, e] : t.powers) {
      double x = axis < static_cast<int>(point.size()) ? point[axis] : 0.0;
      v *= std::pow(x, static_cast<double>(e));
    }
    for (const auto& [axis, f] : t.freq) {
      double x = axis < static_cast<int>(point.size()) ? point[axis] : 0.0;
      GaussRat lam = f.c0;
      for (const auto& [p, c] : f.lin) {
        auto it = env.find(p);
        if (it == env.end()) throw UnboundParameter(p);
        lam += c * GaussRat(it->second);
      }
      std::complex<double> z(lam.re.get_d(), lam.im.get_d());
      v *= std::exp(z * x);
    }
    acc += v;
  }
  double scale = std::max(1.0, std::abs(acc));
  if (std::abs(acc.imag()) >= 1e-12 * scale)
    throw NonRealResult("imaginary residue " + std::to_string(acc.imag()));
  return acc.real();
}

// ------------------------------------------------------------- printing

namespace {

// A printable real atom: coeff * params * powers * exp(rho.x) * trig(sigma.x)
struct Atom {
  Rat coeff;
  std::vector<std::pair<std::string, unsigned>> params;
  std::vector<std::pair<int, unsigned>> powers;
  std::vector<std::pair<int, AffForm>> rho;    // real frequency part
  int trig = 0;                                // 0 none, 1 cos, 2 sin
  std::vector<std::pair<int, AffForm>> sigma;  // trig argument
};

// real/imag split of an affine form; coefficients must themselves split.
AffForm re_part(const AffForm& f) {
  AffForm r;
  r.c0 = GaussRat(f.c0.re);
  for (const auto& [p, c] : f.lin)
    if (c.re != 0) r.lin.emplace_back(p, GaussRat(c.re));
  return r;
}
AffForm im_part(const AffForm& f) {
  AffForm r;
  r.c0 = GaussRat(f.c0.im);
  for (const auto& [p, c] : f.lin)
    if (c.im != 0) r.lin.emplace_back(p, GaussRat(c.im));
  return r;
}

int sign_of_im(const std::vector<std::pair<int, AffForm>>& freq) {
  for (const auto& [axis, f] : freq) {
    if (int s = sgn(f.c0.im)) return s;
    for (const auto& [p, c] : f.lin)
      if (int s = sgn(c.im)) return s;
  }
  return 0;
}

std::string rat_factor(const Rat& r) {
  return r.get_str();  // "p" or "p/q"
}

void append_factor(std::string& s, const std::string& f) {
  if (!s.empty()) s += "*";
  s += f;
}

std::string linear_arg(const std::vector<std::pair<int, AffForm>>& forms) {
  // sum over axes of (affine coefficient)*xN, grammar-conformant
  std::string s;
  bool first = true;
  for (const auto& [axis, f] : forms) {
    std::string coord = "x" + std::to_string(axis + 1);
    // constant piece
    if (f.c0.im != 0) throw NonRealResult("complex frequency survived folding");
    if (f.c0.re != 0) {
      Rat c = f.c0.re;
      std::string piece;
      Rat ac = abs(c);
      if (ac == 1)
        piece = coord;
      else
        piece = rat_factor(ac) + "*" + coord;
      if (first) {
        s += (c < 0 ? "-" : "") + piece;
        first = false;
      } else {
        s += (c < 0 ? "-" : "+") + piece;
      }
    }
    for (const auto& [p, c] : f.lin) {
      if (c.im != 0) throw NonRealResult("complex frequency survived folding");
      Rat cr = c.re;
      Rat ac = abs(cr);
      std::string piece;
      if (ac == 1)
        piece = p + "*" + coord;
      else
        piece = rat_factor(ac) + "*" + p + "*" + coord;
      if (first) {
        s += (cr < 0 ? "-" : "") + piece;
        first = false;
      } else {
        s += (cr < 0 ? "-" : "+") + piece;
      }
    }
  }
  return s;
}

std::string atom_str(const Atom& a) {
  std::string body;
  for (const auto& [p, e] : a.params) {
    std::string f = p;
    if (e > 1) f += "^" + std::to_string(e);
    append_factor(body, f);
  }
  for (const auto& [axis, e] : a.powers) {
    std::string f = "x" + std::to_string(axis + 1);
    if (e > 1) f += "^" + std::to_string(e);
    append_factor(body, f);
  }
  if (!a.rho.empty()) append_factor(body, "exp(" + linear_arg(a.rho) + ")");
  if (a.trig == 1) append_factor(body, "cos(" + linear_arg(a.sigma) + ")");
  if (a.trig == 2) append_factor(body, "sin(" + linear_arg(a.sigma) + ")");
  Rat ac = abs(a.coeff);
  if (body.empty()) return rat_factor(ac);
  if (ac == 1) return body;
  return rat_factor(ac) + "*" + body;
}

}  // namespace

std::string ExpPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<Atom> atoms;
  std::vector<bool> used(terms_.size(), false);
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (used[i]) continue;
    const ExpPolyTerm& t = terms_[i];
    int s = sign_of_im(t.freq);
    if (s == 0) {
      if (t.coeff.im != 0)
        throw NonRealResult("complex coefficient on real-frequency term");
      Atom a;
      a.coeff = t.coeff.re;
      a.params = t.params;
      a.powers = t.powers;
      a.rho = t.freq;
      atoms.push_back(std::move(a));
      used[i] = true;
      continue;
    }
    // find the exact conjugate partner
    ExpPolyTerm want = t;
    for (auto& [axis, f] : want.freq) f = f.conj();
    size_t j = i;
    bool found = false;
    for (size_t k = 0; k < terms_.size(); ++k) {
      if (k == i || used[k]) continue;
      if (compare_key(terms_[k], want) == 0) {
        j = k;
        found = true;
        break;
      }
    }
    if (!found || terms_[j].coeff != t.coeff.conj())
      throw NonRealResult("unpaired complex-exponential term");
    used[i] = used[j] = true;
    const ExpPolyTerm& rep = (s > 0) ? t : terms_[j];
    // rep has positive imaginary signature; pair folds to
    // 2 Re(c) cos(sigma.x) - 2 Im(c) sin(sigma.x), all times shared factors
    std::vector<std::pair<int, AffForm>> rho, sigma;
    for (const auto& [axis, f] : rep.freq) {
      AffForm rp = re_part(f), ip = im_part(f);
      if (!rp.is_zero()) rho.emplace_back(axis, rp);
      if (!ip.is_zero()) sigma.emplace_back(axis, ip);
    }
    Rat cr = rep.coeff.re, ci = rep.coeff.im;
    if (cr != 0) {
      Atom a;
      a.coeff = cr * 2;
      a.params = rep.params;
      a.powers = rep.powers;
      a.rho = rho;
      a.trig = 1;
      a.sigma = sigma;
      atoms.push_back(std::move(a));
    }
    if (ci != 0) {
      Atom a;
      a.coeff = ci * -2;
      a.params = rep.params;
      a.powers = rep.powers;
      a.rho = rho;
      a.trig = 2;
      a.sigma = sigma;
      atoms.push_back(std::move(a));
    }
  }
  std::string out;
  for (size_t i = 0; i < atoms.size(); ++i) {
    bool neg = atoms[i].coeff < 0;
    if (i == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += atom_str(atoms[i]);
  }
  return out;
}

std::string ExpPoly::repr() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i) os << ", ";
    os << gauss_str(t.coeff);
    for (const auto& [p, e] : t.params) os << " " << p << "^" << e;
    for (const auto& [ax, e] : t.powers) os << " x" << ax + 1 << "^" << e;
    for (const auto& [ax, f] : t.freq) {
      os << " e[x" << ax + 1 << ": " << gauss_str(f.c0);
      for (const auto& [p, c] : f.lin) os << "+" << gauss_str(c) << "*" << p;
      os << "]";
    }
  }
  os << "]";
  return os.str();
}

}  // namespace nambu
