#include "nambu/multivec.hpp"

#include <algorithm>
#include <random>

#include "nambu/errors.hpp"

namespace nambu {

namespace {

// sign of the permutation sorting idx; 0 when a repeat occurs
int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (size_t i = 0; i + 1 < idx.size(); ++i)
    for (size_t j = 0; j + 1 < idx.size() - i; ++j)
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
  for (size_t i = 0; i + 1 < idx.size(); ++i)
    if (idx[i] == idx[i + 1]) return 0;
  return sign;
}

void increasing_tuples(int dim, int order, std::vector<int>& cur,
                       int start, const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(cur.size()) == order) {
    fn(cur);
    return;
  }
  for (int i = start; i < dim; ++i) {
    cur.push_back(i);
    increasing_tuples(dim, order, cur, i + 1, fn);
    cur.pop_back();
  }
}

ExpPoly det_of(const std::vector<std::vector<ExpPoly>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  ExpPoly acc;
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<ExpPoly>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<ExpPoly> row;
      for (size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    ExpPoly term = m[0][c] * det_of(minor);
    if (c % 2) term = -term;
    acc += term;
  }
  return acc;
}

}  // namespace

const ExpPoly& Multivector::at(const std::vector<int>& idx) const {
  static const ExpPoly zero;
  auto it = comps_.find(idx);
  return it == comps_.end() ? zero : it->second;
}

void Multivector::set(const std::vector<int>& idx, ExpPoly value) {
  for (size_t i = 0; i + 1 < idx.size(); ++i)
    if (idx[i] >= idx[i + 1]) throw Error("component tuple not increasing");
  if (value.is_zero())
    comps_.erase(idx);
  else
    comps_[idx] = std::move(value);
}

ExpPoly Multivector::component(const std::vector<int>& idx) const {
  std::vector<int> s = idx;
  int sign = sort_sign(s);
  if (sign == 0) return ExpPoly();
  ExpPoly v = at(s);
  return sign > 0 ? v : -v;
}

bool Multivector::is_zero() const { return comps_.empty(); }

Multivector operator+(const Multivector& a, const Multivector& b) {
  Multivector r(a.order_, a.dim_);
  r.comps_ = a.comps_;
  for (const auto& [idx, v] : b.comps_) {
    ExpPoly s = r.at(idx) + v;
    if (s.is_zero())
      r.comps_.erase(idx);
    else
      r.comps_[idx] = std::move(s);
  }
  return r;
}

Multivector operator-(const Multivector& a, const Multivector& b) {
  Multivector r(a.order_, a.dim_);
  r.comps_ = a.comps_;
  for (const auto& [idx, v] : b.comps_) {
    ExpPoly s = r.at(idx) - v;
    if (s.is_zero())
      r.comps_.erase(idx);
    else
      r.comps_[idx] = std::move(s);
  }
  return r;
}

bool operator==(const Multivector& a, const Multivector& b) {
  return a.order_ == b.order_ && a.dim_ == b.dim_ && a.comps_ == b.comps_;
}

Multivector wedge(const ExpPoly& f, const std::vector<VectorField>& fields,
                  int dim) {
  int n = static_cast<int>(fields.size());
  if (n < 1) throw Error("wedge needs at least one field");
  Multivector eta(n, dim);
  std::vector<int> cur;
  increasing_tuples(dim, n, cur, 0, [&](const std::vector<int>& idx) {
    std::vector<std::vector<ExpPoly>> m(n, std::vector<ExpPoly>(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        int mu = idx[c];
        m[r][c] = mu < fields[r].dim() ? fields[r].components[mu] : ExpPoly();
      }
    ExpPoly comp = f * det_of(m);
    if (!comp.is_zero()) eta.set(idx, std::move(comp));
  });
  Multivector::Provenance prov{f, fields};
  eta.set_provenance(std::move(prov));
  return eta;
}

ExpPoly nbracket(const Multivector& eta, const std::vector<ExpPoly>& fs) {
  if (static_cast<int>(fs.size()) != eta.order())
    throw Error("nbracket arity mismatch");
  int n = eta.order();
  // precompute gradients
  std::vector<std::vector<ExpPoly>> grad(n, std::vector<ExpPoly>(eta.dim()));
  for (int i = 0; i < n; ++i)
    for (int mu = 0; mu < eta.dim(); ++mu) grad[i][mu] = fs[i].differentiate(mu);
  ExpPoly acc;
  for (const auto& [idx, comp] : eta.components()) {
    std::vector<std::vector<ExpPoly>> m(n, std::vector<ExpPoly>(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m[r][c] = grad[r][idx[c]];
    acc += comp * det_of(m);
  }
  return acc;
}

VectorField hamiltonian_field(const Multivector& eta,
                              const std::vector<ExpPoly>& fs) {
  if (static_cast<int>(fs.size()) != eta.order() - 1)
    throw Error("hamiltonian_field arity mismatch");
  VectorField x;
  x.components.resize(eta.dim());
  for (int mu = 0; mu < eta.dim(); ++mu) {
    std::vector<ExpPoly> slots = fs;
    slots.push_back(ExpPoly::coordinate(mu));
    x.components[mu] = nbracket(eta, slots);
  }
  return x;
}

Multivector lie_derivative(const VectorField& x, const Multivector& eta) {
  int n = eta.order(), dim = eta.dim();
  Multivector out(n, dim);
  std::vector<int> cur;
  increasing_tuples(dim, n, cur, 0, [&](const std::vector<int>& idx) {
    ExpPoly v = apply(x, eta.at(idx));
    for (int a = 0; a < n; ++a) {
      for (int nu = 0; nu < dim; ++nu) {
        ExpPoly dxa = (idx[a] < x.dim() ? x.components[idx[a]] : ExpPoly())
                          .differentiate(nu);
        if (dxa.is_zero()) continue;
        std::vector<int> jdx = idx;
        jdx[a] = nu;
        ExpPoly comp = eta.component(jdx);
        if (comp.is_zero()) continue;
        v -= dxa * comp;
      }
    }
    if (!v.is_zero()) out.set(idx, std::move(v));
  });
  return out;
}

std::optional<FidCounterexample> fundamental_identity_check(
    const Multivector& eta, int trials, unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> pick(0, 9);
  auto random_poly = [&]() {
    // degree <= 2 polynomial in the dim coordinates, small integer coeffs
    ExpPoly p;
    int dim = eta.dim();
    for (int tries = 0; tries < 4; ++tries) {
      int c = coeff(rng);
      if (c == 0) continue;
      int which = pick(rng);
      ExpPoly mono = ExpPoly::constant(c);
      if (which < 4) {
        mono *= ExpPoly::coordinate(which % dim);
      } else if (which < 8) {
        mono *= ExpPoly::coordinate((which - 4) % dim) *
                ExpPoly::coordinate(pick(rng) % dim);
      }  // else constant
      p += mono;
    }
    return p;
  };
  for (int t = 0; t < trials; ++t) {
    std::vector<ExpPoly> fs;
    for (int i = 0; i + 1 < eta.order(); ++i) fs.push_back(random_poly());
    VectorField x = hamiltonian_field(eta, fs);
    Multivector ld = lie_derivative(x, eta);
    if (!ld.is_zero()) {
      FidCounterexample ce;
      ce.fs = fs;
      ce.component = ld.components().begin()->first;
      return ce;
    }
  }
  return std::nullopt;
}

}  // namespace nambu
