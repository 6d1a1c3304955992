#ifndef NAMBU_LIEALG_HPP
#define NAMBU_LIEALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "nambu/exppoly.hpp"

namespace nambu {

/// Sparse structure constants C_ij^k stored for i<j; entries may reference
/// classification parameters until bound.
struct ConstantTriple {
  int i, j, k;   // 0-based, i < j
  ExpPoly expr;  // constant expression, possibly parametric
};

struct LieAlgebraSpec {
  std::string id;
  int dim = 4;
  std::vector<ConstantTriple> constants;
};

/// Dense exact C_ij^k after parameter binding; antisymmetric accessor.
class BoundConstants {
 public:
  explicit BoundConstants(int dim) : dim_(dim), c_(dim * dim * dim, Rat(0)) {}

  int dim() const { return dim_; }
  void set(int i, int j, int k, const Rat& v);
  Rat get(int i, int j, int k) const;  // antisymmetry implied

 private:
  int dim_;
  std::vector<Rat> c_;
};

BoundConstants bind_constants(const LieAlgebraSpec& alg, const ParamEnv& env);

/// Exact rational vector in the abstract basis X_1..X_dim.
using AbstractVector = std::vector<Rat>;

/// w^k = sum_ij u^i v^j C_ij^k
AbstractVector bracket(const AbstractVector& u, const AbstractVector& v,
                       const BoundConstants& c);

struct JacobiReport {
  bool ok = true;
  int i = -1, j = -1, k = -1;       // first violating triple
  AbstractVector residual;          // nonzero cyclic sum
};

/// Verifies sum_cyclic [X_i,[X_j,X_k]] = 0 for all i<j<k, exactly.
JacobiReport jacobi_check(const BoundConstants& c);

/// t_i = sum_k C_ik^k
AbstractVector trace_vector(const BoundConstants& c);

struct ClosureResult {
  bool ok = false;
  int wi = -1, wj = -1;                 // witness pair on failure
  std::optional<BoundConstants> induced;  // induced constants on success
};

/// Checks every pairwise bracket of the basis stays in its exact span;
/// returns the induced structure constants on success. Throws
/// DegenerateBasis when the vectors are dependent.
ClosureResult subalgebra_closure_check(const std::vector<AbstractVector>& basis,
                                       const BoundConstants& c);

}  // namespace nambu

#endif
