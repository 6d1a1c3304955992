#include "nambu/invfields.hpp"

#include "nambu/errors.hpp"
#include "nambu/linalg.hpp"

namespace nambu {

ExpPoly apply(const VectorField& x, const ExpPoly& f) {
  ExpPoly out;
  for (int mu = 0; mu < x.dim(); ++mu) {
    if (x.components[mu].is_zero()) continue;
    out += x.components[mu] * f.differentiate(mu);
  }
  return out;
}

VectorField field_bracket(const VectorField& x, const VectorField& y) {
  int n = std::max(x.dim(), y.dim());
  VectorField r;
  r.components.resize(n);
  for (int mu = 0; mu < n; ++mu) {
    ExpPoly ymu = mu < y.dim() ? y.components[mu] : ExpPoly();
    ExpPoly xmu = mu < x.dim() ? x.components[mu] : ExpPoly();
    r.components[mu] = apply(x, ymu) - apply(y, xmu);
  }
  return r;
}

std::vector<FrameMismatch> verify_frame(const Frame& frame,
                                        const BoundConstants& c) {
  std::vector<FrameMismatch> bad;
  int n = frame.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      VectorField lhs = field_bracket(frame.row(i), frame.row(j));
      std::vector<ExpPoly> res(n);
      bool zero = true;
      for (int mu = 0; mu < n; ++mu) {
        ExpPoly want;
        for (int k = 0; k < n; ++k) {
          Rat cij = c.get(i, j, k);
          if (cij != 0)
            want += ExpPoly::constant(cij) * frame.rows[k][mu];
        }
        res[mu] = lhs.components[mu] - want;
        if (!res[mu].is_zero()) zero = false;
      }
      if (!zero) bad.push_back({i, j, std::move(res)});
    }
  return bad;
}

namespace {

ExpPoly det_rec(const std::vector<std::vector<ExpPoly>>& m,
                std::vector<int> cols, int row) {
  int n = static_cast<int>(m.size());
  if (row == n) return ExpPoly::constant(1);
  ExpPoly acc;
  for (size_t ci = 0; ci < cols.size(); ++ci) {
    const ExpPoly& e = m[row][cols[ci]];
    if (e.is_zero()) continue;
    std::vector<int> rest;
    for (size_t cj = 0; cj < cols.size(); ++cj)
      if (cj != ci) rest.push_back(cols[cj]);
    ExpPoly sub = det_rec(m, rest, row + 1);
    ExpPoly contrib = e * sub;
    if (ci % 2) contrib = -contrib;
    acc += contrib;
  }
  return acc;
}

}  // namespace

ExpPoly frame_det(const Frame& frame) {
  int n = frame.dim();
  std::vector<int> cols(n);
  for (int i = 0; i < n; ++i) cols[i] = i;
  return det_rec(frame.rows, cols, 0);
}

Frame invert_frame(const Frame& frame) {
  int n = frame.dim();
  ExpPoly det = frame_det(frame);
  if (!det.is_unit())
    throw SingularFrame("frame determinant is not a unit: " + det.repr());
  Frame inv;
  inv.rows.assign(n, std::vector<ExpPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // cofactor C_ji for the (i,j) entry of the inverse
      std::vector<std::vector<ExpPoly>> minor;
      for (int r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<ExpPoly> rr;
        for (int col = 0; col < n; ++col)
          if (col != i) rr.push_back(frame.rows[r][col]);
        minor.push_back(std::move(rr));
      }
      std::vector<int> cols(n - 1);
      for (int k = 0; k < n - 1; ++k) cols[k] = k;
      ExpPoly cof = det_rec(minor, cols, 0);
      if ((i + j) % 2) cof = -cof;
      inv.rows[i][j] = cof.div_unit(det);
    }
  return inv;
}

std::vector<std::vector<ExpPoly>> matrix_exp_scaled(
    const std::vector<std::vector<Rat>>& a, int axis, int sign) {
  int n = static_cast<int>(a.size());
  // A as GaussRat matrix
  GMat A(n, GVec(n, GaussRat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A[i][j] = GaussRat(a[i][j]);

  // characteristic polynomial via Faddeev-LeVerrier
  GPoly charpoly(n + 1, GaussRat(0));
  {
    GMat M(n, GVec(n, GaussRat(0)));
    GaussRat c(1);
    charpoly[n] = GaussRat(1);
    for (int k = 1; k <= n; ++k) {
      // M = A*M + c*I
      GMat AM(n, GVec(n, GaussRat(0)));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          GaussRat s(0);
          for (int l = 0; l < n; ++l)
            if (!A[i][l].is_zero() && !M[l][j].is_zero()) s += A[i][l] * M[l][j];
          AM[i][j] = s;
        }
      for (int i = 0; i < n; ++i) AM[i][i] += c;
      M = AM;
      // c = -tr(A*M)/k
      GaussRat tr(0);
      for (int i = 0; i < n; ++i) {
        GaussRat s(0);
        for (int l = 0; l < n; ++l)
          if (!A[i][l].is_zero() && !M[l][i].is_zero()) s += A[i][l] * M[l][i];
        tr += s;
      }
      c = -(tr / GaussRat(Rat(k)));
      charpoly[n - k] = c;
    }
  }

  auto roots = gp_roots(charpoly);

  // exp(sA) = sum_j g_j(A) u_j(A) e^{lambda_j s} sum_{k<m_j} (A-lambda_j)^k s^k / k!
  auto mat_poly = [&](const GPoly& p) {
    GMat R(n, GVec(n, GaussRat(0)));
    GMat P(n, GVec(n, GaussRat(0)));
    for (int i = 0; i < n; ++i) P[i][i] = GaussRat(1);
    for (size_t d = 0; d < p.size(); ++d) {
      if (!p[d].is_zero())
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) R[i][j] += p[d] * P[i][j];
      if (d + 1 < p.size()) {
        GMat Q(n, GVec(n, GaussRat(0)));
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            GaussRat s(0);
            for (int l = 0; l < n; ++l)
              if (!P[i][l].is_zero() && !A[l][j].is_zero()) s += P[i][l] * A[l][j];
            Q[i][j] = s;
          }
        P = Q;
      }
    }
    return R;
  };
  auto mat_mul = [&](const GMat& X, const GMat& Y) {
    GMat R(n, GVec(n, GaussRat(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        GaussRat s(0);
        for (int l = 0; l < n; ++l)
          if (!X[i][l].is_zero() && !Y[l][j].is_zero()) s += X[i][l] * Y[l][j];
        R[i][j] = s;
      }
    return R;
  };

  std::vector<std::vector<ExpPoly>> out(n, std::vector<ExpPoly>(n));
  GaussRat sgn_s(Rat(sign));
  for (const auto& [lambda, mult] : roots) {
    // f_j = (x - lambda)^mult ; g_j = charpoly / f_j ; u_j = g_j^{-1} mod f_j
    GPoly f = {GaussRat(1)};
    GPoly lin = {-lambda, GaussRat(1)};
    for (int k = 0; k < mult; ++k) f = gp_mul(f, lin);
    auto [g, rem] = gp_divmod(charpoly, f);
    if (!rem.empty()) throw Error("internal: root does not divide charpoly");
    GPoly u = gp_inverse_mod(g, f);
    GMat proj = mat_mul(mat_poly(g), mat_poly(u));
    // nilpotent ladder
    GMat nil(n, GVec(n, GaussRat(0)));
    for (int i = 0; i < n; ++i) nil[i][i] = GaussRat(1);
    Rat kfact(1);
    for (int k = 0; k < mult; ++k) {
      if (k > 0) {
        // nil = nil * (A - lambda I)
        GMat Alam = A;
        for (int i = 0; i < n; ++i) Alam[i][i] -= lambda;
        nil = mat_mul(nil, Alam);
        kfact *= k;
      }
      GMat piece = mat_mul(proj, nil);
      // times s^k e^{lambda s} / k! with s = sign * x_axis
      GaussRat scale = GaussRat(Rat(1) / kfact);
      GaussRat sk(1);
      for (int t = 0; t < k; ++t) sk *= sgn_s;
      scale *= sk;
      AffForm freq(lambda * sgn_s);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (piece[i][j].is_zero()) continue;
          ExpPolyTerm term;
          term.coeff = piece[i][j] * scale;
          if (k > 0) term.powers = {{axis, static_cast<unsigned>(k)}};
          if (!freq.is_zero()) term.freq = {{axis, freq}};
          out[i][j] += ExpPoly::from_terms({term});
        }
    }
  }
  return out;
}

Frame derive_frame(const LieAlgebraSpec& alg, const ParamEnv& env) {
  BoundConstants c = bind_constants(alg, env);
  int n = alg.dim;
  // ad matrices: (ad_nu)^k_m = C_{nu m}^k
  auto ad = [&](int nu) {
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (int col = 0; col < n; ++col)
      for (int k = 0; k < n; ++k)
        if (nu != col) m[k][col] = c.get(nu, col, k);
    return m;
  };
  // column mu of E: e^{-x^n ad_n} ... e^{-x^{mu+1} ad_{mu+1}} T_mu
  // build the running product P_mu from the right
  std::vector<std::vector<ExpPoly>> E(n, std::vector<ExpPoly>(n));
  std::vector<std::vector<ExpPoly>> running(n, std::vector<ExpPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      running[i][j] = i == j ? ExpPoly::constant(1) : ExpPoly();
  for (int mu = n - 1; mu >= 0; --mu) {
    // E column mu = running * e_mu
    for (int i = 0; i < n; ++i) E[i][mu] = running[i][mu];
    if (mu > 0) {
      auto expmat = matrix_exp_scaled(ad(mu), mu, -1);
      std::vector<std::vector<ExpPoly>> next(n, std::vector<ExpPoly>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          ExpPoly s;
          for (int l = 0; l < n; ++l) {
            if (running[i][l].is_zero() || expmat[l][j].is_zero()) continue;
            s += running[i][l] * expmat[l][j];
          }
          next[i][j] = std::move(s);
        }
      running = std::move(next);
    }
  }
  // V = (E^{-1})^T : X_i = V_i^mu d_mu
  Frame emat;
  emat.rows.assign(n, std::vector<ExpPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) emat.rows[i][j] = E[i][j];
  Frame einv = invert_frame(emat);
  Frame v;
  v.rows.assign(n, std::vector<ExpPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v.rows[i][j] = einv.rows[j][i];
  return v;
}

}  // namespace nambu
