#ifndef NAMBU_LINALG_HPP
#define NAMBU_LINALG_HPP

#include <optional>
#include <vector>

#include "nambu/rational.hpp"

namespace nambu {

using GVec = std::vector<GaussRat>;
using GMat = std::vector<GVec>;  // row-major, rectangular

/// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(GMat& m);

/// Basis of {x : m x = 0}.
std::vector<GVec> nullspace_basis(GMat m);

/// Any solution of a x = b, or nullopt if inconsistent.
std::optional<GVec> solve_linear(GMat a, const GVec& b);

/// Coefficients expressing target in span(columns), or nullopt.
std::optional<GVec> in_span(const GMat& columns_as_rows, const GVec& target);

// --- dense polynomials over Q(i), coefficients low to high -----------------

using GPoly = std::vector<GaussRat>;

GPoly gp_trim(GPoly p);
GPoly gp_add(const GPoly& a, const GPoly& b);
GPoly gp_mul(const GPoly& a, const GPoly& b);
GPoly gp_scale(const GPoly& a, const GaussRat& s);
/// quotient and remainder of a by b (b nonzero)
std::pair<GPoly, GPoly> gp_divmod(const GPoly& a, const GPoly& b);
GPoly gp_derivative(const GPoly& a);
GPoly gp_monic(const GPoly& a);
GPoly gp_gcd(GPoly a, GPoly b);
/// u with u*a == 1 mod m (a, m coprime)
GPoly gp_inverse_mod(const GPoly& a, const GPoly& m);
GaussRat gp_eval(const GPoly& p, const GaussRat& x);

/// Complete factorization of p over Q(i) into linear factors:
/// returns (root, multiplicity) pairs. Throws NonClosedExponential when a
/// factor has no rational or complex-rational root.
std::vector<std::pair<GaussRat, int>> gp_roots(const GPoly& p);

}  // namespace nambu

#endif
