#ifndef NAMBU_SOLVE_HPP
#define NAMBU_SOLVE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nambu/liealg.hpp"
#include "nambu/multivec.hpp"

namespace nambu {

/// The linear problem of the multiplicativity PDE X_i f + t_i f = q_i,
/// f(e) = 0, over a finite ansatz. Fields and ansatz must be parameter-free;
/// the trace belongs to the (sub)algebra the fields realize.
struct MultiplicativityProblem {
  std::vector<VectorField> fields;
  std::vector<Rat> trace;
  std::vector<ExpPoly> ansatz;  // single-shape basis functions, conj-closed
};

/// Affine solution set: reduced-echelon basis of the feasible q-subspace
/// with one representative f per basis vector, plus the homogeneous part
/// (all q_i = 0, f(e) = 0). Every f satisfies its system exactly and
/// vanishes at the origin.
struct SolutionSpace {
  struct Generator {
    std::vector<Rat> q;  // echelon q-vector
    ExpPoly f;
  };
  std::vector<Generator> generators;
  std::vector<ExpPoly> homogeneous;
  std::vector<int> forced_zero;  // q indices identically zero

  /// Solution with q_i = 1 and all other q zero, when that vector is feasible.
  std::optional<ExpPoly> particular(int qi) const;
  /// All f directions spanning the space (generators + homogeneous).
  std::vector<ExpPoly> span() const;
};

SolutionSpace solve_multiplicative(const MultiplicativityProblem& problem);

/// Heuristic ansatz: monomials of degree <= max_degree over the axes the
/// fields touch, times exponentials with frequencies from the additive
/// closure (two summands) of the frame frequency set, its negations and any
/// extra seed expressions; completed to closure under the fields.
std::vector<ExpPoly> default_ansatz(const std::vector<VectorField>& fields,
                                    const std::vector<ExpPoly>& extra = {},
                                    unsigned max_degree = 2,
                                    std::size_t cap = 4000);

/// Is target inside span(gens) over Q(i)? Exact linear solve on term keys.
bool in_function_span(const std::vector<ExpPoly>& gens, const ExpPoly& target);

/// Stacked variant: each generator and the target carry k parallel component
/// functions; membership must hold with one shared coefficient vector.
bool in_tensor_span(const std::vector<std::vector<ExpPoly>>& gens,
                    const std::vector<ExpPoly>& target);

/// Splits e by parameter monomial (degree <= 1 in the remaining parameters):
/// key "" holds the parameter-free part, key "q1" the coefficient of q1, ...
/// Throws Error when a parameter appears with degree > 1 or two parameters
/// share a term.
std::map<std::string, ExpPoly> split_by_params(const ExpPoly& e);

struct Theorem1Result {
  bool closure_ok = false;
  bool fid_ok = false;
  int witness_i = -1, witness_j = -1;  // closure failure pair
};

/// Theorem-1 correspondence on a decomposable order-3 wedge: subalgebra
/// closure of the abstract basis against the fundamental-identity check of
/// wedge(1, combination fields).
Theorem1Result theorem1_check(const std::vector<AbstractVector>& basis,
                              const Frame& frame, const BoundConstants& c,
                              int trials, unsigned long seed);

}  // namespace nambu

#endif
