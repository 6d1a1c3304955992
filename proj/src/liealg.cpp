#include "nambu/liealg.hpp"

#include "nambu/errors.hpp"
#include "nambu/linalg.hpp"

namespace nambu {

void BoundConstants::set(int i, int j, int k, const Rat& v) {
  c_[(i * dim_ + j) * dim_ + k] = v;
  c_[(j * dim_ + i) * dim_ + k] = -v;
}

Rat BoundConstants::get(int i, int j, int k) const {
  return c_[(i * dim_ + j) * dim_ + k];
}

BoundConstants bind_constants(const LieAlgebraSpec& alg, const ParamEnv& env) {
  BoundConstants c(alg.dim);
  for (const auto& t : alg.constants) {
    ExpPoly e = t.expr.substitute_params(env);
    auto left = e.params_used();
    if (!left.empty()) throw UnboundParameter(*left.begin());
    if (!e.is_constant())
      throw Error("structure constant is not a constant expression");
    if (e.is_zero()) {
      c.set(t.i, t.j, t.k, Rat(0));
      continue;
    }
    GaussRat v = e.terms()[0].coeff;
    if (v.im != 0) throw Error("complex structure constant");
    c.set(t.i, t.j, t.k, v.re);
  }
  return c;
}

AbstractVector bracket(const AbstractVector& u, const AbstractVector& v,
                       const BoundConstants& c) {
  int n = c.dim();
  AbstractVector w(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (v[j] == 0 || i == j) continue;
      Rat uv = u[i] * v[j];
      for (int k = 0; k < n; ++k) {
        Rat cij = c.get(i, j, k);
        if (cij != 0) w[k] += uv * cij;
      }
    }
  }
  return w;
}

JacobiReport jacobi_check(const BoundConstants& c) {
  int n = c.dim();
  auto basis = [&](int i) {
    AbstractVector v(n, Rat(0));
    v[i] = 1;
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        AbstractVector r(n, Rat(0));
        AbstractVector t1 = bracket(basis(j), basis(k), c);
        AbstractVector t2 = bracket(basis(k), basis(i), c);
        AbstractVector t3 = bracket(basis(i), basis(j), c);
        AbstractVector s1 = bracket(basis(i), t1, c);
        AbstractVector s2 = bracket(basis(j), t2, c);
        AbstractVector s3 = bracket(basis(k), t3, c);
        bool zero = true;
        for (int m = 0; m < n; ++m) {
          r[m] = s1[m] + s2[m] + s3[m];
          if (r[m] != 0) zero = false;
        }
        if (!zero) return JacobiReport{false, i, j, k, r};
      }
  return JacobiReport{};
}

AbstractVector trace_vector(const BoundConstants& c) {
  int n = c.dim();
  AbstractVector t(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (i != k) t[i] += c.get(i, k, k);
  return t;
}

ClosureResult subalgebra_closure_check(const std::vector<AbstractVector>& basis,
                                       const BoundConstants& c) {
  int n = c.dim();
  int m = static_cast<int>(basis.size());
  // independence
  GMat bm(m, GVec(n, GaussRat(0)));
  for (int r = 0; r < m; ++r)
    for (int col = 0; col < n; ++col) bm[r][col] = GaussRat(basis[r][col]);
  {
    GMat copy = bm;
    if (static_cast<int>(rref(copy).size()) < m)
      throw DegenerateBasis("subalgebra basis is linearly dependent");
  }
  ClosureResult res;
  res.induced = BoundConstants(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      AbstractVector w = bracket(basis[i], basis[j], c);
      GVec target(n);
      for (int col = 0; col < n; ++col) target[col] = GaussRat(w[col]);
      auto alpha = in_span(bm, target);
      if (!alpha) {
        res.ok = false;
        res.wi = i;
        res.wj = j;
        res.induced.reset();
        return res;
      }
      for (int k = 0; k < m; ++k) {
        if ((*alpha)[k].im != 0) throw Error("complex closure coefficient");
        res.induced->set(i, j, k, (*alpha)[k].re);
      }
    }
  res.ok = true;
  return res;
}

}  // namespace nambu
