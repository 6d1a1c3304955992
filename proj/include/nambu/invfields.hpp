#ifndef NAMBU_INVFIELDS_HPP
#define NAMBU_INVFIELDS_HPP

#include <optional>
#include <vector>

#include "nambu/exppoly.hpp"
#include "nambu/liealg.hpp"

namespace nambu {

/// General vector field X = components[mu] * d_mu.
struct VectorField {
  std::vector<ExpPoly> components;

  int dim() const { return static_cast<int>(components.size()); }
};

/// Left-invariant frame: row i holds V_i^mu with X_i = V_i^mu d_mu.
/// Invariants: determinant a unit of the class; rows at the origin are the
/// identity (X_i|_e = d_i).
struct Frame {
  std::vector<std::vector<ExpPoly>> rows;

  int dim() const { return static_cast<int>(rows.size()); }
  VectorField row(int i) const { return VectorField{rows[i]}; }
};

/// X(f) = sum_mu X^mu d_mu f, exact.
ExpPoly apply(const VectorField& x, const ExpPoly& f);

/// [X,Y]^mu = X(Y^mu) - Y(X^mu), exact.
VectorField field_bracket(const VectorField& x, const VectorField& y);

struct FrameMismatch {
  int i, j;
  std::vector<ExpPoly> residual;  // [X_i,X_j] - C_ij^k X_k
};

/// Checks [X_i,X_j] = C_ij^k X_k as exact identities for all i<j.
std::vector<FrameMismatch> verify_frame(const Frame& frame,
                                        const BoundConstants& c);

/// Exact determinant of the frame matrix.
ExpPoly frame_det(const Frame& frame);

/// Exact inverse (adjugate over unit determinant). Throws SingularFrame.
Frame invert_frame(const Frame& frame);

/// Left-invariant frame from structure constants via coordinates of the
/// second kind g = exp(x^1 T_1)...exp(x^n T_n): the Maurer-Cartan columns
/// are products of closed-form matrix exponentials of ad matrices, then
/// inverted exactly. Throws NonClosedExponential when an ad eigenvalue is
/// not in Q(i), SingularFrame when the determinant is not a unit.
Frame derive_frame(const LieAlgebraSpec& alg, const ParamEnv& env);

/// exp(s*A) entries as ExpPoly in the coordinate `axis` with s = sign*x_axis,
/// for an exact rational matrix A. Exposed for tests.
std::vector<std::vector<ExpPoly>> matrix_exp_scaled(
    const std::vector<std::vector<Rat>>& a, int axis, int sign);

}  // namespace nambu

#endif
