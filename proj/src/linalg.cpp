#include "nambu/linalg.hpp"

#include <algorithm>

#include "nambu/errors.hpp"

namespace nambu {

std::vector<int> rref(GMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    GaussRat inv = GaussRat(1) / m[r][c];
    for (size_t j = c; j < cols; ++j)
      if (!m[r][j].is_zero()) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      GaussRat f = m[i][c];
      for (size_t j = c; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

std::vector<GVec> nullspace_basis(GMat m) {
  if (m.empty()) return {};
  size_t cols = m[0].size();
  std::vector<int> piv = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<GVec> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    GVec v(cols, GaussRat(0));
    v[f] = GaussRat(1);
    for (size_t r = 0; r < piv.size(); ++r) {
      // row r: x_{piv[r]} + ... = 0
      v[piv[r]] = -m[r][f];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<GVec> solve_linear(GMat a, const GVec& b) {
  if (a.empty()) {
    for (const auto& x : b)
      if (!x.is_zero()) return std::nullopt;
    return GVec{};
  }
  size_t cols = a[0].size();
  for (size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  std::vector<int> piv = rref(a);
  // inconsistent iff a pivot lands in the appended column
  if (!piv.empty() && piv.back() == static_cast<int>(cols)) return std::nullopt;
  GVec x(cols, GaussRat(0));
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = a[r][cols];
  return x;
}

std::optional<GVec> in_span(const GMat& gens, const GVec& target) {
  // gens: each row is a generator in the ambient space
  if (gens.empty()) {
    for (const auto& x : target)
      if (!x.is_zero()) return std::nullopt;
    return GVec{};
  }
  size_t dim = target.size();
  GMat a(dim, GVec(gens.size(), GaussRat(0)));
  for (size_t g = 0; g < gens.size(); ++g)
    for (size_t i = 0; i < dim; ++i) a[i][g] = gens[g][i];
  return solve_linear(std::move(a), target);
}

// ------------------------------------------------------------ polynomials

GPoly gp_trim(GPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

GPoly gp_add(const GPoly& a, const GPoly& b) {
  GPoly r(std::max(a.size(), b.size()), GaussRat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return gp_trim(std::move(r));
}

GPoly gp_mul(const GPoly& a, const GPoly& b) {
  if (a.empty() || b.empty()) return {};
  GPoly r(a.size() + b.size() - 1, GaussRat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return gp_trim(std::move(r));
}

GPoly gp_scale(const GPoly& a, const GaussRat& s) {
  if (s.is_zero()) return {};
  GPoly r = a;
  for (auto& c : r) c *= s;
  return r;
}

std::pair<GPoly, GPoly> gp_divmod(const GPoly& a, const GPoly& b) {
  if (b.empty()) throw Error("polynomial division by zero");
  GPoly rem = a, quot;
  if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, GaussRat(0));
  while (rem.size() >= b.size() && !rem.empty()) {
    GaussRat f = rem.back() / b.back();
    size_t shift = rem.size() - b.size();
    quot[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
    rem = gp_trim(std::move(rem));
  }
  return {gp_trim(std::move(quot)), std::move(rem)};
}

GPoly gp_derivative(const GPoly& a) {
  GPoly r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * GaussRat(Rat((long)i)));
  return gp_trim(std::move(r));
}

GPoly gp_monic(const GPoly& a) {
  if (a.empty()) return a;
  return gp_scale(a, GaussRat(1) / a.back());
}

GPoly gp_gcd(GPoly a, GPoly b) {
  a = gp_trim(std::move(a));
  b = gp_trim(std::move(b));
  while (!b.empty()) {
    auto [q, r] = gp_divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return gp_monic(a);
}

GPoly gp_inverse_mod(const GPoly& a, const GPoly& m) {
  // extended euclid on (a, m)
  GPoly r0 = m, r1 = gp_divmod(a, m).second;
  GPoly s0 = {}, s1 = {GaussRat(1)};
  while (!r1.empty()) {
    auto [q, r2] = gp_divmod(r0, r1);
    GPoly s2 = gp_add(s0, gp_scale(gp_mul(q, s1), GaussRat(-1)));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw Error("polynomials not coprime in inverse_mod");
  return gp_divmod(gp_scale(s0, GaussRat(1) / r0[0]), m).second;
}

GaussRat gp_eval(const GPoly& p, const GaussRat& x) {
  GaussRat acc(0);
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

namespace {

// divisors of |n|, via trial division; throws if n too composite/large
std::vector<mpz_class> divisors_of(const mpz_class& n_in) {
  mpz_class n = abs(n_in);
  if (n == 0) return {};
  std::vector<std::pair<mpz_class, int>> fac;
  mpz_class d = 2;
  while (d * d <= n && d < 1000000) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      fac.emplace_back(d, e);
    }
    d += (d == 2 ? 1 : 2);
  }
  if (n > 1) {
    if (n > mpz_class("1000000000000"))
      throw NonClosedExponential("constant term too large to factor");
    fac.emplace_back(n, 1);
  }
  std::vector<mpz_class> divs = {1};
  for (const auto& [p, e] : fac) {
    size_t sz = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
    }
    if (divs.size() > 4096) throw NonClosedExponential("too many divisor candidates");
  }
  return divs;
}

// rational roots of a poly with rational (real) coefficients
std::vector<Rat> rational_roots(const GPoly& p) {
  for (const auto& c : p)
    if (c.im != 0) return {};  // only used on real polys
  // clear denominators
  mpz_class lcm = 1;
  for (const auto& c : p) lcm = lcm / gcd(lcm, c.re.get_den()) * c.re.get_den();
  std::vector<mpz_class> ic;
  for (const auto& c : p) ic.push_back(mpz_class(c.re.get_num() * (lcm / c.re.get_den())));
  while (!ic.empty() && ic.back() == 0) ic.pop_back();
  if (ic.empty()) return {};
  // strip zero roots upstream; here constant term nonzero expected
  if (ic.front() == 0) return {};
  std::vector<Rat> roots;
  auto nums = divisors_of(ic.front());
  auto dens = divisors_of(ic.back());
  for (const auto& pn : nums)
    for (const auto& qd : dens)
      for (int s : {1, -1}) {
        Rat cand(pn * s, qd);
        cand.canonicalize();
        if (gp_eval(p, GaussRat(cand)).is_zero()) {
          if (std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
        }
      }
  return roots;
}

}  // namespace

std::vector<std::pair<GaussRat, int>> gp_roots(const GPoly& p_in) {
  GPoly p = gp_monic(gp_trim(p_in));
  if (p.empty()) throw Error("zero polynomial has no root set");
  std::vector<std::pair<GaussRat, int>> roots;
  auto add_root = [&](const GaussRat& r) {
    for (auto& [x, m] : roots)
      if (x == r) {
        ++m;
        return;
      }
    roots.emplace_back(r, 1);
  };
  // strip zero roots
  size_t z = 0;
  while (z < p.size() && p[z].is_zero()) ++z;
  if (z > 0) {
    for (size_t k = 0; k < z; ++k) add_root(GaussRat(0));
    p.erase(p.begin(), p.begin() + z);
  }
  // peel rational roots greedily
  bool progress = true;
  while (p.size() > 1 && progress) {
    progress = false;
    if (p.size() == 2) {  // linear: root = -c0/c1
      add_root(-(p[0] / p[1]));
      p = {GaussRat(1)};
      break;
    }
    if (p.size() == 3) {  // quadratic over Q: roots rational or p +- iq
      GaussRat b = p[1] / p[2], c = p[0] / p[2];
      if (b.im != 0 || c.im != 0)
        throw NonClosedExponential("complex quadratic coefficients");
      Rat hb = b.re / 2;
      Rat disc = hb * hb - c.re;  // roots -hb +- sqrt(disc)
      // exact rational square root test
      auto sqrt_rat = [](const Rat& v) -> std::optional<Rat> {
        if (v < 0) return std::nullopt;
        mpz_class n = v.get_num(), d = v.get_den();
        mpz_class sn = sqrt(n), sd = sqrt(d);
        if (sn * sn == n && sd * sd == d) {
          Rat r(sn, sd);
          r.canonicalize();
          return r;
        }
        return std::nullopt;
      };
      if (auto s = sqrt_rat(disc)) {
        add_root(GaussRat(Rat(-hb + *s)));
        add_root(GaussRat(Rat(-hb - *s)));
      } else if (auto s2 = sqrt_rat(Rat(-disc))) {
        add_root(GaussRat(Rat(-hb), *s2));
        add_root(GaussRat(Rat(-hb), Rat(-*s2)));
      } else {
        throw NonClosedExponential("quadratic with irrational roots");
      }
      p = {GaussRat(1)};
      break;
    }
    for (const Rat& r : rational_roots(p)) {
      GPoly lin = {GaussRat(Rat(-r)), GaussRat(1)};
      while (true) {
        auto [q, rem] = gp_divmod(p, lin);
        if (!rem.empty()) break;
        add_root(GaussRat(r));
        p = q;
        progress = true;
      }
      break;  // re-derive candidates on the reduced poly
    }
    if (!progress && p.size() > 3)
      throw NonClosedExponential("polynomial does not split over Q(i)");
  }
  if (p.size() > 1) throw NonClosedExponential("polynomial does not split over Q(i)");
  return roots;
}

}  // namespace nambu
